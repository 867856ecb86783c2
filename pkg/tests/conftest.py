from pathlib import Path

import pytest

from ontoclir.config import Config
from ontoclir.pipeline import Engine, bundled_path

TEST_DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def engine() -> Engine:
    return Engine.load(config=Config())


@pytest.fixture(scope="session")
def tree(engine):
    return engine.tree


@pytest.fixture(scope="session")
def lexicons(engine):
    return engine.lexicons


@pytest.fixture(scope="session")
def index(engine):
    return engine.index


@pytest.fixture(scope="session")
def fixture_queries():
    from ontoclir.evaluation import parse_queries

    return parse_queries(bundled_path("queries.tsv").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def fixture_qrels():
    from ontoclir.evaluation import parse_qrels

    return parse_qrels(bundled_path("qrels.tsv").read_text(encoding="utf-8"))
