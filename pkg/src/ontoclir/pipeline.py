"""End-to-end query pipeline shared by the CLI and the HTTP service.

Analysis, shortlisting, ranking, extraction, and translation are wired
here once so both transports return byte-identical responses.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import corpus as corpus_mod
from . import extraction, retrieval
from .config import Config
from .corpus import CorpusIndex
from .errors import NoDocumentsInLanguage, NoPassages
from .evaluation import EvalQuery, EvalReport, evaluate_run
from .extraction import Answer
from .ontology import OntologyTree, load_tree
from .retrieval import RankedResult
from .textproc import Lexicon, QueryAnalysis, analyze_query, load_lexicon

DATA_DIR = Path(__file__).parent / "data"


def bundled_path(name: str) -> Path:
    return DATA_DIR / name


@dataclass
class QueryResponse:
    analysis: QueryAnalysis
    ranked: list[RankedResult]
    answer: Answer
    timings_ms: dict[str, float] = field(default_factory=dict)

    def to_dict(self, include_timings: bool = False) -> dict:
        out = {
            "query_analysis": self.analysis.to_dict(),
            "ranked": [r.to_dict() for r in self.ranked],
            "answer": self.answer.to_dict(),
        }
        if include_timings:
            out["timings_ms"] = {k: round(v, 3) for k, v in self.timings_ms.items()}
        return out

    def to_json(self, include_timings: bool = False) -> str:
        return json.dumps(self.to_dict(include_timings), ensure_ascii=False, indent=2)


class Engine:
    """Holds the loaded ontology, lexicons, corpus index, and config."""

    def __init__(
        self,
        tree: OntologyTree,
        lexicons: dict[str, Lexicon],
        index: CorpusIndex,
        config: Config | None = None,
    ):
        self.tree = tree
        self.lexicons = lexicons
        self.index = index
        self.config = config or Config()

    @classmethod
    def load(
        cls,
        index_path: str | Path | None = None,
        ontology_path: str | Path | None = None,
        config: Config | None = None,
    ) -> "Engine":
        """Load from files, falling back to the bundled fixtures."""
        ontology_path = Path(ontology_path) if ontology_path else bundled_path("ontology.tsv")
        tree = load_tree(ontology_path.read_text(encoding="utf-8"))
        lexicons = {
            lang: load_lexicon(
                bundled_path(f"lexicon_{lang}.tsv").read_text(encoding="utf-8"), lang
            )
            for lang in ("en", "ta")
        }
        if index_path:
            index = corpus_mod.load_index(Path(index_path).read_text(encoding="utf-8"))
        else:
            index = corpus_mod.ingest(bundled_path("corpus"))
        return cls(tree=tree, lexicons=lexicons, index=index, config=config)

    def analyze(self, text: str, lang: str | None, use_ontology: bool = True) -> QueryAnalysis:
        return analyze_query(text, lang, self.tree, self.lexicons, use_ontology=use_ontology)

    def shortlist(self, analysis: QueryAnalysis) -> list[retrieval.Candidate]:
        return retrieval.shortlist(
            self.index,
            analysis,
            min_main_hits=self.config.shortlist_min_main_hits,
            min_expansion_hits=self.config.shortlist_min_expansion_hits,
        )

    def retrieve_ids(self, text: str, lang: str | None, use_ontology: bool) -> tuple[set[str], str]:
        """Shortlisted document ids plus the chosen search language."""
        analysis = self.analyze(text, lang, use_ontology=use_ontology)
        try:
            candidates = self.shortlist(analysis)
        except NoDocumentsInLanguage:
            return set(), analysis.search_language
        return {c.doc_id for c in candidates}, analysis.search_language

    def query(self, text: str, lang: str | None = None) -> QueryResponse:
        cfg = self.config
        timings: dict[str, float] = {}

        def timed(name: str, fn):
            t0 = time.perf_counter()
            result = fn()
            timings[name] = (time.perf_counter() - t0) * 1000.0
            return result

        analysis = timed("analyze", lambda: self.analyze(text, lang))
        candidates = timed("shortlist", lambda: self.shortlist(analysis))
        if not candidates:
            raise NoPassages()
        graph = timed("graph", lambda: retrieval.build_doc_graph(candidates))
        scores = timed(
            "pagerank",
            lambda: retrieval.pagerank(
                graph, damping=cfg.damping, epsilon=cfg.epsilon, max_iter=cfg.max_iter
            ),
        )
        ranked = timed(
            "rank",
            lambda: retrieval.rank(
                candidates, scores, analysis,
                alpha=cfg.alpha, expansion_weight=cfg.expansion_weight,
            ),
        )
        bodies = {r.doc_id: self.index.documents[r.doc_id].body for r in ranked}
        passages = timed(
            "extract",
            lambda: extraction.extract_passages(
                ranked, bodies, analysis, top_k=cfg.extraction_top_k
            ),
        )
        passages = timed(
            "consolidate",
            lambda: extraction.consolidate(
                passages,
                jaccard_threshold=cfg.extraction_jaccard_threshold,
                max_passages=cfg.extraction_max_passages,
            ),
        )
        answer = timed(
            "translate",
            lambda: extraction.translate_answer(
                passages, analysis.search_language, analysis.query_language, self.tree
            ),
        )
        return QueryResponse(analysis=analysis, ranked=ranked, answer=answer,
                             timings_ms=timings)

    def evaluate(self, queries: list[EvalQuery], qrels: dict[str, set[str]],
                 mode: str) -> EvalReport:
        return evaluate_run(queries, qrels, self.retrieve_ids, mode=mode)
