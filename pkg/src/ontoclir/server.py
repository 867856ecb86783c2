"""HTTP API around the shared pipeline.

All responses are UTF-8 JSON with an explicit charset; the service holds
no mutable state, so identical requests always get identical answers.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .errors import (
    EmptyQuery,
    NoDocumentsInLanguage,
    NoKeywords,
    NoPassages,
    UnknownNode,
)
from .evaluation import KEYWORDS_ONLY, WITH_ONTOLOGY, parse_qrels, parse_queries
from .evaluation import EvalQuery
from .languages import REGISTRY
from .pipeline import Engine


class _Utf8JSONResponse(JSONResponse):
    media_type = "application/json; charset=utf-8"

    def render(self, content) -> bytes:
        import json

        return json.dumps(content, ensure_ascii=False).encode("utf-8")


def _error(status: int, code: str, message: str) -> _Utf8JSONResponse:
    return _Utf8JSONResponse({"code": code, "message": message}, status_code=status)


def create_app(engine: Engine, static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="ontoclir", default_response_class=_Utf8JSONResponse)

    @app.get("/api/health")
    def health():
        return {"status": "ok", "doc_count": len(engine.index)}

    @app.get("/api/languages")
    def languages():
        return {"languages": REGISTRY.codes()}

    @app.get("/api/ontology/node/{node_id}")
    def ontology_node(node_id: str):
        node = engine.tree.nodes.get(node_id)
        if node is None:
            return _error(404, "UnknownNode", f"unknown node {node_id!r}")
        return {
            "id": node.id,
            "parent": node.parent,
            "children": list(node.children),
            "entries": {lang: list(forms) for lang, forms in node.entries.items()},
            "root_language": node.root_language,
        }

    @app.get("/api/ontology/search")
    def ontology_search(term: str = "", lang: str = "en"):
        if not term:
            return _error(400, "EmptyQuery", "term parameter is required")
        if lang not in REGISTRY:
            return _error(400, "UnknownLanguage", f"unknown language {lang!r}")
        return {"term": term, "lang": lang, "nodes": engine.tree.lookup(term, lang)}

    @app.post("/api/query")
    async def query(request: Request):
        try:
            payload = await request.json()
        except Exception:
            return _error(400, "BadRequest", "body must be JSON")
        if not isinstance(payload, dict) or not isinstance(payload.get("text", None), str):
            return _error(400, "BadRequest", "body must be {text, lang?}")
        text = payload["text"]
        lang = payload.get("lang")
        if lang is not None and lang not in REGISTRY:
            return _error(400, "UnknownLanguage", f"unknown language {lang!r}")
        try:
            response = engine.query(text, lang)
        except EmptyQuery as exc:
            return _error(400, "EmptyQuery", str(exc))
        except NoKeywords as exc:
            return _error(422, "NoKeywords", str(exc))
        except NoDocumentsInLanguage as exc:
            return _error(422, "NoDocumentsInLanguage", str(exc))
        except NoPassages as exc:
            return _error(422, "NoPassages", str(exc))
        except UnknownNode as exc:
            return _error(404, "UnknownNode", str(exc))
        return response.to_dict(include_timings=False)

    @app.post("/api/eval")
    async def run_eval(request: Request):
        try:
            payload = await request.json()
        except Exception:
            return _error(400, "BadRequest", "body must be JSON")
        if not isinstance(payload, dict):
            return _error(400, "BadRequest", "body must be an object")
        try:
            if "queries_tsv" in payload:
                queries = parse_queries(payload["queries_tsv"])
            else:
                queries = [
                    EvalQuery(id=q["id"], language=q["lang"], text=q["text"])
                    for q in payload.get("queries", [])
                ]
            if "qrels_tsv" in payload:
                qrels = parse_qrels(payload["qrels_tsv"])
            else:
                qrels = {k: set(v) for k, v in payload.get("qrels", {}).items()}
        except (KeyError, TypeError) as exc:
            return _error(400, "BadRequest", f"malformed eval payload: {exc}")
        mode = payload.get("mode", WITH_ONTOLOGY)
        if mode == "compare":
            return {
                m: engine.evaluate(queries, qrels, m).to_dict()
                for m in (KEYWORDS_ONLY, WITH_ONTOLOGY)
            }
        if mode not in (WITH_ONTOLOGY, KEYWORDS_ONLY):
            return _error(400, "BadRequest", f"unknown mode {mode!r}")
        return engine.evaluate(queries, qrels, mode).to_dict()

    if static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app
