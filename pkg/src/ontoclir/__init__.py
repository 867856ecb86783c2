"""Bilingual English/Tamil information retrieval with ontology-routed
search-language selection."""

from .config import Config
from .pipeline import Engine, QueryResponse

__all__ = ["Config", "Engine", "QueryResponse"]
__version__ = "0.1.0"
