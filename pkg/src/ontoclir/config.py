"""Runtime configuration: flat ``key = value`` files with dotted keys.

Every paper-silent knob lives here so evaluations can ablate them (for
example ``alpha = 1.0`` removes PageRank from the ranking blend).  The
``ONTOCLIR_CONFIG`` environment variable points at a config file.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields
from pathlib import Path

ENV_VAR = "ONTOCLIR_CONFIG"


@dataclass
class Config:
    damping: float = 0.85
    epsilon: float = 1e-8
    max_iter: int = 100
    alpha: float = 0.5
    expansion_weight: float = 0.5
    shortlist_min_main_hits: int = 1
    shortlist_min_expansion_hits: int = 2
    extraction_top_k: int = 5
    extraction_max_passages: int = 5
    extraction_jaccard_threshold: float = 0.8

    def validate(self) -> "Config":
        if not 0.0 < self.damping < 1.0:
            raise ValueError("damping must be in (0, 1)")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError("alpha must be in [0, 1]")
        return self


_KEY_MAP = {
    "damping": "damping",
    "epsilon": "epsilon",
    "max_iter": "max_iter",
    "alpha": "alpha",
    "expansion_weight": "expansion_weight",
    "shortlist.min_main_hits": "shortlist_min_main_hits",
    "shortlist.min_expansion_hits": "shortlist_min_expansion_hits",
    "extraction.top_k": "extraction_top_k",
    "extraction.max_passages": "extraction_max_passages",
    "extraction.jaccard_threshold": "extraction_jaccard_threshold",
}


def parse_config(content: str) -> Config:
    values: dict[str, object] = {}
    types = {f.name: f.type for f in fields(Config)}
    for line_no, line in enumerate(content.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {line_no}: expected key = value")
        key, raw = (part.strip() for part in line.split("=", 1))
        raw = raw.strip("\"'")
        if key not in _KEY_MAP:
            raise ValueError(f"line {line_no}: unknown config key {key!r}")
        attr = _KEY_MAP[key]
        values[attr] = int(raw) if types[attr] == "int" else float(raw)
    return Config(**values).validate()


def load_config(path: str | Path | None = None) -> Config:
    """Load from an explicit path, else from $ONTOCLIR_CONFIG, else defaults."""
    if path is None:
        env = os.environ.get(ENV_VAR)
        if not env:
            return Config()
        path = env
    return parse_config(Path(path).read_text(encoding="utf-8"))
