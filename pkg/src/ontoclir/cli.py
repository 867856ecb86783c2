"""Command-line interface: index, search, eval, ontology validate, serve."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import corpus as corpus_mod
from . import evaluation
from .config import load_config
from .errors import (
    CorpusError,
    EmptyQuery,
    NoDocumentsInLanguage,
    NoKeywords,
    NoPassages,
    OntoclirError,
)
from .ontology import load_tree
from .pipeline import Engine, bundled_path

# Distinct exit codes for the failure modes callers branch on.
EXIT_NO_KEYWORDS = 3
EXIT_NO_DOCUMENTS = 4
EXIT_NO_PASSAGES = 5
EXIT_EMPTY_QUERY = 6


@click.group()
def main():
    """Bilingual English/Tamil ontology-routed information retrieval."""


@main.command("index")
@click.argument("corpus_dir", type=click.Path(exists=True, file_okay=False))
@click.argument("out_index", type=click.Path(dir_okay=False))
def cli_index(corpus_dir: str, out_index: str):
    """Ingest a corpus directory into a JSONL index file."""
    try:
        index = corpus_mod.ingest(corpus_dir)
    except CorpusError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    Path(out_index).write_text(corpus_mod.save_index(index), encoding="utf-8")
    counts = ", ".join(
        f"{lang}: {len(ids)}" for lang, ids in sorted(index.by_language.items())
    )
    click.echo(counts)


def _load_engine(index_path: str | None, ontology_path: str | None,
                 config_path: str | None) -> Engine:
    return Engine.load(
        index_path=index_path,
        ontology_path=ontology_path,
        config=load_config(config_path),
    )


@main.command("search")
@click.argument("query_text")
@click.option("--index", "index_path", type=click.Path(exists=True), default=None,
              help="Corpus index file (defaults to the bundled toy corpus).")
@click.option("--ontology", "ontology_path", type=click.Path(exists=True), default=None,
              help="Ontology file (defaults to the bundled festival ontology).")
@click.option("--lang", "lang_flag", type=str, default=None,
              help="Query language; detected from script when omitted.")
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("--json", "as_json", is_flag=True, help="Emit machine-readable JSON.")
def cli_search(query_text, index_path, ontology_path, lang_flag, config_path, as_json):
    """Run the full pipeline for one query and print the answer."""
    engine = _load_engine(index_path, ontology_path, config_path)
    try:
        response = engine.query(query_text, lang_flag)
    except EmptyQuery as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_EMPTY_QUERY)
    except NoKeywords as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_NO_KEYWORDS)
    except NoDocumentsInLanguage as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_NO_DOCUMENTS)
    except NoPassages as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_NO_PASSAGES)
    if as_json:
        # Timings vary run to run and are excluded so output is reproducible.
        click.echo(response.to_json(include_timings=False))
        return
    a = response.analysis
    click.echo(f"query language : {a.query_language}")
    click.echo(f"search language: {a.search_language}")
    click.echo(f"keywords       : {', '.join(a.keywords)}")
    if a.expansion_terms:
        click.echo(f"expansion      : {', '.join(a.expansion_terms)}")
    click.echo("")
    for r in response.ranked:
        click.echo(f"  #{r.rank} {r.doc_id} (combined {r.combined:.3f})")
    click.echo("")
    for p in response.answer.passages:
        click.echo(f"- {p.text}")
    if response.answer.untranslated_terms:
        click.echo(f"(untranslated: {', '.join(response.answer.untranslated_terms)})")
    timings = ", ".join(f"{k} {v:.1f}ms" for k, v in response.timings_ms.items())
    click.echo(f"[{timings}]", err=True)


@main.command("eval")
@click.option("--index", "index_path", type=click.Path(exists=True), default=None)
@click.option("--ontology", "ontology_path", type=click.Path(exists=True), default=None)
@click.option("--queries", "queries_path", type=click.Path(exists=True), default=None,
              help="Queries file (query-id<TAB>lang<TAB>text).")
@click.option("--qrels", "qrels_path", type=click.Path(exists=True), default=None,
              help="Relevance judgments (query-id<TAB>doc-id).")
@click.option("--mode", type=click.Choice([evaluation.WITH_ONTOLOGY, evaluation.KEYWORDS_ONLY]),
              default=evaluation.WITH_ONTOLOGY)
@click.option("--compare", is_flag=True, help="Run both modes and print the delta.")
@click.option("--out", "out_prefix", type=str, default=None,
              help="Write <prefix>.tsv and <prefix>.json reports.")
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def cli_eval(index_path, ontology_path, queries_path, qrels_path, mode, compare,
             out_prefix, config_path):
    """Batch-evaluate queries against relevance judgments."""
    engine = _load_engine(index_path, ontology_path, config_path)
    queries_file = Path(queries_path) if queries_path else bundled_path("queries.tsv")
    qrels_file = Path(qrels_path) if qrels_path else bundled_path("qrels.tsv")
    queries = evaluation.parse_queries(queries_file.read_text(encoding="utf-8"))
    qrels = evaluation.parse_qrels(qrels_file.read_text(encoding="utf-8"))

    modes = [evaluation.KEYWORDS_ONLY, evaluation.WITH_ONTOLOGY] if compare else [mode]
    reports = {m: engine.evaluate(queries, qrels, m) for m in modes}

    for m in modes:
        report = reports[m]
        click.echo(f"== {m} ==")
        click.echo(report.to_tsv(), nl=False)
        for qid, reason in report.skipped:
            click.echo(f"skipped {qid}: {reason}")
        click.echo("")

    if compare:
        base = reports[evaluation.KEYWORDS_ONLY]
        full = reports[evaluation.WITH_ONTOLOGY]
        click.echo("== DELTA (WITH_ONTOLOGY - KEYWORDS_ONLY) ==")
        click.echo(f"macro precision: {full.macro_precision - base.macro_precision:+.3f}")
        click.echo(f"macro recall   : {full.macro_recall - base.macro_recall:+.3f}")
        click.echo(f"macro F        : {full.macro_f - base.macro_f:+.3f}")

    if out_prefix:
        last = reports[modes[-1]]
        Path(f"{out_prefix}.tsv").write_text(last.to_tsv(), encoding="utf-8")
        payload = {m: reports[m].to_dict() for m in modes}
        Path(f"{out_prefix}.json").write_text(
            json.dumps(payload, ensure_ascii=False, indent=2), encoding="utf-8"
        )


@main.group("ontology")
def cli_ontology():
    """Ontology maintenance commands."""


@cli_ontology.command("validate")
@click.argument("ontology_file", type=click.Path(exists=True, dir_okay=False))
def cli_ontology_validate(ontology_file: str):
    """Validate an ontology file; exit nonzero with the violation on failure."""
    try:
        tree = load_tree(Path(ontology_file).read_text(encoding="utf-8"))
    except OntoclirError as exc:
        click.echo(f"invalid: {exc}", err=True)
        sys.exit(1)
    click.echo(f"ok: {len(tree.nodes)} nodes, root {tree.root!r}")


@main.command("serve")
@click.option("--index", "index_path", type=click.Path(exists=True), default=None)
@click.option("--ontology", "ontology_path", type=click.Path(exists=True), default=None)
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000, type=int)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("--static", "static_dir", type=click.Path(exists=True, file_okay=False),
              default=None, help="Optional directory of web UI assets to serve at /.")
def cli_serve(index_path, ontology_path, host, port, config_path, static_dir):
    """Run the HTTP API service."""
    import uvicorn

    from .server import create_app

    engine = _load_engine(index_path, ontology_path, config_path)
    app = create_app(engine, static_dir=static_dir)
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
