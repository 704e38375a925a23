import pytest
from fastapi.testclient import TestClient

from clsec_service.app import create_app
from clsec_service.config import ServiceConfig
from clsec_service.punct import tokens_preserved

FIXTURES = [
    "the early climbers were looking for the easiest way to the top",
    "rivers have shaped human settlement since the earliest times",
    "a colony of honeybees works like a single living body",
    "the printing press changed the speed at which ideas could travel",
    "weather is the state of the air at a particular place and time",
    "a bridge is a promise written in stone steel or timber",
    "tea began as a medicine and became a habit of half the world",
    "for most of history sailors found their way by watching the sky",
    "a volcano is a window into the hot interior of the earth",
    "a library is a city of voices that do not quarrel",
    "the railway compressed distance as nothing before it had done",
    "a coral reef is built by animals smaller than a grain of rice",
    "the compass needle is a small piece of honesty",
    "glass is sand that has forgotten how to be stone",
    "a map is an argument about what matters",
    "salt is the only rock that people eat",
    "before clocks the day was divided by the sun and the stomach",
    "the wind has been harnessed for thousands of years",
    "paper holds civilization together more cheaply than any other invention",
    "whales are mammals that returned to the sea",
    "a desert is defined not by heat but by thirst",
    "photography taught light to leave a record",
    "canals are rivers that go where they are told",
    "a spider builds with material it manufactures inside its own body",
    "a lighthouse is a sentence of one word repeated all night",
    "vaccination borrows a trick from the disease itself",
    "soil is a slow factory that turns rock into food for plants",
    "the kite is the oldest flying machine a toy that taught serious lessons",
    "chess is a war endlessly refought on sixty four squares",
    "caves are the landscape turned inside out",
    "the bicycle is the most efficient vehicle ever devised",
    "the tide is the breathing of the sea and the moon is its metronome",
    "silk is the thread of a moth that no longer flies wild",
    "radio made the first invisible bridge between continents",
    "a garden is a negotiation between a person and the rest of nature",
    "an iceberg is a piece of a glacier that has gone to sea",
    "pottery is the art of making stone from mud and fire",
    "the peregrine falcon is the fastest animal alive",
    "a museum is a slow conversation between the living and the dead",
    "the steam engine was the first machine that worked like weather",
    "a forest is a community that manufactures its own weather",
    "the electric telegraph separated the message from the messenger",
    "penguins are birds that traded the sky for the sea",
    "optics began with simple questions about bent sticks in water",
    "astronomy is the oldest science and still the most humbling",
    "bread is the simplest magic in the kitchen",
    "an earthquake is the ground keeping an old promise",
    "to sail is to argue with the wind and win on points",
    "music is ordered sound and the order is mathematics",
    "an ant colony solves problems that would defeat a committee of engineers",
]


@pytest.fixture(scope="module")
def client():
    app = create_app(ServiceConfig(model="builtin", punct_model="builtin"))
    with TestClient(app) as c:
        yield c


def test_fixture_count():
    assert len(FIXTURES) >= 50


@pytest.mark.parametrize("text", FIXTURES)
def test_punctuate_preserves_word_tokens(client, text):
    resp = client.post("/punctuate", json={"text": text})
    assert resp.status_code == 200
    restored = resp.json()["text"]
    assert tokens_preserved(text, restored)


def test_punctuate_inserts_terminal_mark(client):
    out = client.post("/punctuate", json={"text": "the cat sat"}).json()["text"]
    assert out.endswith((".", "!", "?"))


def test_punctuate_already_punctuated_ok(client):
    text = "The cat sat. The dog ran."
    resp = client.post("/punctuate", json={"text": text})
    assert resp.status_code == 200
    assert tokens_preserved(text, resp.json()["text"])


def test_punctuate_empty_400(client):
    assert client.post("/punctuate", json={"text": "  "}).status_code == 400


def test_punctuate_deterministic(client):
    text = FIXTURES[0]
    a = client.post("/punctuate", json={"text": text}).json()
    b = client.post("/punctuate", json={"text": text}).json()
    assert a == b
