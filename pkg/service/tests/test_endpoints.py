import math

import pytest
from fastapi.testclient import TestClient

from clsec_service.app import create_app
from clsec_service.config import ServiceConfig


@pytest.fixture(scope="module")
def client():
    app = create_app(ServiceConfig(model="builtin", punct_model="builtin"))
    with TestClient(app) as c:
        yield c


def test_capabilities_stable(client):
    a = client.get("/capabilities").json()
    b = client.get("/capabilities").json()
    assert a == b
    assert a["model"] == "builtin"
    assert a["mask_token"] == "[MASK]"
    assert a["vocab_size"] > 100
    assert a["max_context"] > 0


def test_vocab_contract(client):
    words = client.get("/vocab").json()
    caps = client.get("/capabilities").json()
    assert len(words) == caps["vocab_size"]
    assert words == sorted(words)                      # deterministic order
    assert all(" " not in w for w in words)            # no whitespace inside words
    backend = client.app.state.backend
    assert all(len(backend.tokenize_word(w)) == 1 for w in words[:500])


def test_fill_mask_normalization(client):
    resp = client.post("/fill_mask", json={
        "masked_text": "There is a beach with palm [MASK] and clear blue water",
        "masks": [{"index": 7, "candidates": ["trees", "trews", "tries", "stone", "water"]}],
    })
    assert resp.status_code == 200
    vec = resp.json()["masks"][0]["logprobs"]
    assert len(vec) == 5
    assert sum(math.exp(v) for v in vec) == pytest.approx(1.0, abs=1e-6)


def test_fill_mask_palm_trees_ranking(client):
    candidates = ["trees", "trewz", "trqqs", "tzees", "treex"]
    resp = client.post("/fill_mask", json={
        "masked_text": "There is a beach with palm [MASK] and clear blue water",
        "masks": [{"index": 7, "candidates": candidates}],
    })
    vec = resp.json()["masks"][0]["logprobs"]
    ranked = sorted(zip(vec, candidates), reverse=True)
    assert ranked[0][1] == "trees"   # the real word beats garbled variants


def test_fill_mask_single_candidate(client):
    resp = client.post("/fill_mask", json={
        "masked_text": "a [MASK] c",
        "masks": [{"index": 2, "candidates": ["word"]}],
    })
    assert resp.json()["masks"][0]["logprobs"][0] == pytest.approx(0.0, abs=1e-12)


def test_fill_mask_multiple_masks(client):
    resp = client.post("/fill_mask", json={
        "masked_text": "[MASK] cat sat on [MASK] mat",
        "masks": [{"index": 1, "candidates": ["The", "Thy"]},
                  {"index": 5, "candidates": ["the", "thy", "tee"]}],
    })
    body = resp.json()["masks"]
    assert [m["index"] for m in body] == [1, 5]
    assert [len(m["logprobs"]) for m in body] == [2, 3]


def test_fill_mask_deterministic(client):
    payload = {
        "masked_text": "the [MASK] sat",
        "masks": [{"index": 2, "candidates": ["cat", "cot", "cut"]}],
    }
    a = client.post("/fill_mask", json=payload).json()
    b = client.post("/fill_mask", json=payload).json()
    assert a == b


def test_fill_mask_count_mismatch_400(client):
    resp = client.post("/fill_mask", json={
        "masked_text": "no masks here",
        "masks": [{"index": 1, "candidates": ["x"]}],
    })
    assert resp.status_code == 400


def test_fill_mask_multitoken_candidate_422(client):
    resp = client.post("/fill_mask", json={
        "masked_text": "a [MASK] c",
        "masks": [{"index": 2, "candidates": ["two words"]}],
    })
    assert resp.status_code == 422


def test_bertscore_identity(client):
    resp = client.post("/bertscore", json={
        "reference": "the cat sat on the mat",
        "hypothesis": "the cat sat on the mat",
    })
    body = resp.json()
    assert body["score"] >= 99.0
    assert body["model"]


def test_bertscore_corruption_lowers_score(client):
    ref = "the early climbers were looking for the easiest way to the top"
    identity = client.post("/bertscore", json={
        "reference": ref, "hypothesis": ref}).json()["score"]
    corrupted = client.post("/bertscore", json={
        "reference": ref,
        "hypothesis": ref.replace("climbers", "qlimxers")}).json()["score"]
    assert corrupted < identity


def test_bertscore_roughly_symmetric(client):
    a = "the cat sat on the mat"
    b = "a dog ran in the park"
    ab = client.post("/bertscore", json={"reference": a, "hypothesis": b}).json()["score"]
    ba = client.post("/bertscore", json={"reference": b, "hypothesis": a}).json()["score"]
    assert abs(ab - ba) < 5.0


def test_bertscore_empty_400(client):
    resp = client.post("/bertscore", json={"reference": "", "hypothesis": "x"})
    assert resp.status_code == 400
