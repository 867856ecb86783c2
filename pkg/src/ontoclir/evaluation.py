"""Precision / recall / F-measure arithmetic and the batch evaluation runner.

The runner compares two modes: the full ontology pipeline, and a
keywords-only baseline with expansion disabled and the search language
pinned to the query language.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import EmptyRelevantSet, FormatError, NoKeywords, NoDocumentsInLanguage
from .errors import EmptyQuery, UnknownQueryId

WITH_ONTOLOGY = "WITH_ONTOLOGY"
KEYWORDS_ONLY = "KEYWORDS_ONLY"


def precision(retrieved: set[str], relevant: set[str]) -> float:
    """Fraction of retrieved documents that are relevant; 0 for no retrieval."""
    if not retrieved:
        return 0.0
    return len(retrieved & relevant) / len(retrieved)


def recall(retrieved: set[str], relevant: set[str]) -> float:
    """Fraction of relevant documents that were retrieved."""
    if not relevant:
        raise EmptyRelevantSet()
    return len(retrieved & relevant) / len(relevant)


def f_measure(p: float, r: float) -> float:
    """Harmonic mean of precision and recall; 0 when both sides are 0."""
    if p + r == 0:
        return 0.0
    return 2.0 * p * r / (p + r)


@dataclass(frozen=True)
class EvalQuery:
    id: str
    language: str
    text: str


@dataclass
class EvalRow:
    query_id: str
    query_text: str
    apt_language: str
    relevant_count: int
    precision: float
    recall: float
    f_measure: float

    def to_dict(self) -> dict:
        return {
            "query_id": self.query_id,
            "query_text": self.query_text,
            "apt_language": self.apt_language,
            "relevant_count": self.relevant_count,
            "precision": round(self.precision, 6),
            "recall": round(self.recall, 6),
            "f_measure": round(self.f_measure, 6),
        }


@dataclass
class EvalReport:
    mode: str
    rows: list[EvalRow] = field(default_factory=list)
    skipped: list[tuple[str, str]] = field(default_factory=list)  # (query_id, reason)

    @property
    def macro_precision(self) -> float:
        return sum(r.precision for r in self.rows) / len(self.rows) if self.rows else 0.0

    @property
    def macro_recall(self) -> float:
        return sum(r.recall for r in self.rows) / len(self.rows) if self.rows else 0.0

    @property
    def macro_f(self) -> float:
        return sum(r.f_measure for r in self.rows) / len(self.rows) if self.rows else 0.0

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "rows": [r.to_dict() for r in self.rows],
            "skipped": [{"query_id": q, "reason": r} for q, r in self.skipped],
            "macro": {
                "precision": round(self.macro_precision, 6),
                "recall": round(self.macro_recall, 6),
                "f_measure": round(self.macro_f, 6),
            },
        }

    def to_tsv(self) -> str:
        lines = ["QUERY\tAPT LANGUAGE\tRELEVANT DOCUMENTS\tPRECISION\tRECALL\tF-MEASURE"]
        for row in self.rows:
            lines.append(
                "\t".join(
                    [
                        row.query_text,
                        row.apt_language.upper(),
                        str(row.relevant_count),
                        f"{row.precision:.3f}",
                        f"{row.recall:.3f}",
                        f"{row.f_measure:.3f}",
                    ]
                )
            )
        lines.append(
            "\t".join(
                [
                    "AVERAGE",
                    "",
                    "",
                    f"{self.macro_precision:.3f}",
                    f"{self.macro_recall:.3f}",
                    f"{self.macro_f:.3f}",
                ]
            )
        )
        return "\n".join(lines) + "\n"


def parse_queries(content: str) -> list[EvalQuery]:
    """``query-id<TAB>lang<TAB>text`` lines."""
    queries: list[EvalQuery] = []
    for line_no, line in enumerate(content.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise FormatError("expected query-id<TAB>lang<TAB>text", line_no)
        queries.append(EvalQuery(id=parts[0], language=parts[1].lower(), text=parts[2]))
    return queries


def parse_qrels(content: str) -> dict[str, set[str]]:
    """``query-id<TAB>doc-id`` lines."""
    qrels: dict[str, set[str]] = {}
    for line_no, line in enumerate(content.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise FormatError("expected query-id<TAB>doc-id", line_no)
        qrels.setdefault(parts[0], set()).add(parts[1])
    return qrels


def evaluate_run(
    queries: list[EvalQuery],
    qrels: dict[str, set[str]],
    retrieve: Callable[[str, str, bool], tuple[set[str], str]],
    mode: str = WITH_ONTOLOGY,
) -> EvalReport:
    """Per-query P/R/F rows plus macro averages.

    *retrieve* is ``(text, lang, use_ontology) -> (retrieved ids, search
    language)``; the evaluation stays independent of how retrieval is wired.
    """
    if mode not in (WITH_ONTOLOGY, KEYWORDS_ONLY):
        raise ValueError(f"unknown mode {mode!r}")
    report = EvalReport(mode=mode)
    use_ontology = mode == WITH_ONTOLOGY
    for query in queries:
        if query.id not in qrels:
            report.skipped.append((query.id, str(UnknownQueryId(query.id))))
            continue
        relevant = qrels[query.id]
        if not relevant:
            report.skipped.append((query.id, str(EmptyRelevantSet(query.id))))
            continue
        try:
            retrieved, search_language = retrieve(query.text, query.language, use_ontology)
        except (NoKeywords, NoDocumentsInLanguage, EmptyQuery):
            retrieved, search_language = set(), query.language
        p = precision(retrieved, relevant)
        r = recall(retrieved, relevant)
        report.rows.append(
            EvalRow(
                query_id=query.id,
                query_text=query.text,
                apt_language=search_language,
                relevant_count=len(relevant),
                precision=p,
                recall=r,
                f_measure=f_measure(p, r),
            )
        )
    return report
