"""HTTP scoring service: masked-word probabilities over caller-supplied
candidates, punctuation restoration, and semantic-similarity scoring."""
from .app import create_app
from .config import ServiceConfig

__version__ = "0.1.0"
