import json

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from ontoclir import cli
from ontoclir.pipeline import bundled_path
from ontoclir.server import create_app


@pytest.fixture(scope="module")
def runner():
    return CliRunner()


@pytest.fixture(scope="module")
def client(engine):
    return TestClient(create_app(engine))


class TestCliIndex:
    def test_fixture_counts(self, runner, tmp_path_factory):
        out = tmp_path_factory.mktemp("idx") / "corpus.jsonl"
        result = runner.invoke(
            cli.main, ["index", str(bundled_path("corpus")), str(out)]
        )
        assert result.exit_code == 0
        assert result.output.strip() == "en: 12, ta: 12"
        assert out.exists()

    def test_missing_dir(self, runner, tmp_path):
        result = runner.invoke(
            cli.main, ["index", str(tmp_path / "nope"), str(tmp_path / "o.jsonl")]
        )
        assert result.exit_code != 0

    def test_invalid_utf8_named(self, runner, tmp_path):
        (tmp_path / "en").mkdir()
        bad = tmp_path / "en" / "bad.txt"
        bad.write_bytes(b"\xff broken")
        result = runner.invoke(
            cli.main, ["index", str(tmp_path), str(tmp_path / "o.jsonl")]
        )
        assert result.exit_code == 1
        assert "bad.txt" in result.output


class TestCliSearch:
    def test_cross_language_routing(self, runner):
        result = runner.invoke(
            cli.main, ["search", "Different day of pongal", "--lang", "en", "--json"]
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["query_analysis"]["search_language"] == "ta"
        assert payload["answer"]["answer_language"] == "en"

    def test_empty_query_exit_code(self, runner):
        result = runner.invoke(cli.main, ["search", ""])
        assert result.exit_code == cli.EXIT_EMPTY_QUERY

    def test_no_passages_exit_code(self, runner):
        result = runner.invoke(cli.main, ["search", "qqq zzz"])
        assert result.exit_code == cli.EXIT_NO_PASSAGES

    def test_no_keywords_exit_code(self, runner):
        result = runner.invoke(cli.main, ["search", "the of was"])
        assert result.exit_code == cli.EXIT_NO_KEYWORDS

    def test_repeated_runs_byte_identical(self, runner, fixture_queries):
        for q in fixture_queries:
            args = ["search", q.text, "--lang", q.language, "--json"]
            first = runner.invoke(cli.main, args)
            second = runner.invoke(cli.main, args)
            assert first.exit_code == 0
            assert first.stdout_bytes == second.stdout_bytes


class TestCliEval:
    def test_compare_direction(self, runner, tmp_path):
        prefix = tmp_path / "report"
        result = runner.invoke(cli.main, ["eval", "--compare", "--out", str(prefix)])
        assert result.exit_code == 0
        payload = json.loads(prefix.with_suffix(".json").read_text(encoding="utf-8"))
        assert (
            payload["WITH_ONTOLOGY"]["macro"]["f_measure"]
            > payload["KEYWORDS_ONLY"]["macro"]["f_measure"]
        )
        assert prefix.with_suffix(".tsv").exists()

    def test_unknown_query_id_listed_exit_zero(self, runner, tmp_path):
        queries = tmp_path / "queries.tsv"
        queries.write_text("qx\ten\teaster\n", encoding="utf-8")
        result = runner.invoke(cli.main, ["eval", "--queries", str(queries)])
        assert result.exit_code == 0
        assert "qx" in result.output

    def test_empty_queries_file(self, runner, tmp_path):
        queries = tmp_path / "queries.tsv"
        queries.write_text("", encoding="utf-8")
        result = runner.invoke(cli.main, ["eval", "--queries", str(queries)])
        assert result.exit_code == 0


class TestCliOntology:
    def test_validate_ok(self, runner):
        result = runner.invoke(
            cli.main, ["ontology", "validate", str(bundled_path("ontology.tsv"))]
        )
        assert result.exit_code == 0
        assert "ok" in result.output

    def test_validate_cycle(self, runner, tmp_path):
        bad = tmp_path / "bad.tsv"
        bad.write_text("a\tb\ten\ten=x;ta=அ\nb\ta\ten\ten=y;ta=ஆ\n", encoding="utf-8")
        result = runner.invoke(cli.main, ["ontology", "validate", str(bad)])
        assert result.exit_code == 1
        assert "cycle" in result.output.lower()


class TestHttpApi:
    def test_health(self, client):
        response = client.get("/api/health")
        assert response.status_code == 200
        assert response.json() == {"status": "ok", "doc_count": 24}

    def test_languages(self, client):
        assert client.get("/api/languages").json() == {"languages": ["en", "ta"]}

    def test_query_tamil(self, client):
        response = client.post("/api/query", json={"text": "பொங்கல் எப்பொழுது"})
        assert response.status_code == 200
        payload = response.json()
        assert payload["answer"]["answer_language"] == "ta"
        assert payload["query_analysis"]["query_language"] == "ta"

    def test_query_empty_400(self, client):
        response = client.post("/api/query", json={"text": ""})
        assert response.status_code == 400
        assert response.json()["code"] == "EmptyQuery"

    def test_query_no_keywords_422(self, client):
        response = client.post("/api/query", json={"text": "the of was"})
        assert response.status_code == 422
        assert response.json()["code"] == "NoKeywords"

    def test_query_no_passages_422(self, client):
        response = client.post("/api/query", json={"text": "qqq zzz"})
        assert response.status_code == 422
        assert response.json()["code"] == "NoPassages"

    def test_unknown_node_404(self, client):
        assert client.get("/api/ontology/node/nonexistent").status_code == 404

    def test_node_json(self, client):
        payload = client.get("/api/ontology/node/pongal").json()
        assert payload["root_language"] == "ta"
        assert "jallikattu" in payload["children"]

    def test_ontology_search(self, client):
        payload = client.get("/api/ontology/search",
                             params={"term": "Pongal", "lang": "en"}).json()
        assert payload["nodes"] == ["pongal"]

    def test_charset_header(self, client):
        response = client.post("/api/query", json={"text": "பொங்கல் எப்பொழுது"})
        assert "charset=utf-8" in response.headers["content-type"]

    def test_eval_endpoint(self, client):
        payload = {
            "queries_tsv": bundled_path("queries.tsv").read_text(encoding="utf-8"),
            "qrels_tsv": bundled_path("qrels.tsv").read_text(encoding="utf-8"),
            "mode": "compare",
        }
        response = client.post("/api/eval", json=payload)
        assert response.status_code == 200
        body = response.json()
        assert (
            body["WITH_ONTOLOGY"]["macro"]["f_measure"]
            > body["KEYWORDS_ONLY"]["macro"]["f_measure"]
        )


class TestSharedPipeline:
    def test_cli_and_http_identical_json(self, runner, client, fixture_queries):
        for q in fixture_queries:
            cli_result = runner.invoke(
                cli.main, ["search", q.text, "--lang", q.language, "--json"]
            )
            assert cli_result.exit_code == 0
            http_payload = client.post(
                "/api/query", json={"text": q.text, "lang": q.language}
            ).json()
            assert json.loads(cli_result.output) == http_payload
