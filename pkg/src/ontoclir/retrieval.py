"""Document search and ranking.

Shortlisting is brute-force substring search (every position of every
document body is checked), which keeps the matcher honest for both scripts.
The shortlist is then ranked by a blend of term-hit weight and PageRank run
over a shared-term similarity graph: plain text documents carry no links,
so two documents are connected with weight equal to the number of distinct
search terms that hit both.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .corpus import CorpusIndex
from .errors import EmptyGraph, EmptyPattern, NoDocumentsInLanguage
from .languages import fold, nfc, normalize
from .textproc import QueryAnalysis

MAIN_KEYWORD = "MAIN_KEYWORD"
EXPANSION = "EXPANSION"


@dataclass(frozen=True)
class TermHits:
    term: str
    kind: str  # MAIN_KEYWORD or EXPANSION
    offsets: tuple[int, ...]


@dataclass
class Candidate:
    doc_id: str
    hits: list[TermHits]
    main_hit_count: int
    expansion_hit_count: int


@dataclass
class DocGraph:
    nodes: list[str]
    edges: dict[tuple[str, str], float] = field(default_factory=dict)


@dataclass(frozen=True)
class RankedResult:
    doc_id: str
    term_score: float
    pagerank_score: float
    combined: float
    rank: int

    def to_dict(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "term_score": round(self.term_score, 9),
            "pagerank_score": round(self.pagerank_score, 9),
            "combined": round(self.combined, 9),
            "rank": self.rank,
        }


def naive_find(t: str, p: str) -> list[int]:
    """Every byte offset where pattern *p* occurs in text *t*.

    Overlapping matches are included.  Both sides are NFC-normalized;
    comparison is case-insensitive for Latin letters and exact for Tamil.
    Offsets index into the UTF-8 encoding of the normalized text.
    """
    if not p:
        raise EmptyPattern()
    tn = nfc(t)
    tc = fold(tn)
    pc = fold(nfc(p))
    m = len(pc)
    byte_at = [0] * (len(tc) + 1)
    for i, ch in enumerate(tn):
        byte_at[i + 1] = byte_at[i] + len(ch.encode("utf-8"))
    out: list[int] = []
    for i in range(len(tc) - m + 1):
        if tc[i:i + m] == pc:
            out.append(byte_at[i])
    return out


def shortlist(
    index: CorpusIndex,
    analysis: QueryAnalysis,
    min_main_hits: int = 1,
    min_expansion_hits: int = 2,
) -> list[Candidate]:
    """Scan the search-language partition and keep documents passing the
    shortlist rule: enough main-keyword hits, or enough expansion hits."""
    doc_ids = index.by_language.get(analysis.search_language, [])
    if not doc_ids:
        raise NoDocumentsInLanguage(analysis.search_language)

    main_terms = list(analysis.search_terms)
    main_keys = {normalize(term) for term in main_terms}
    expansion_terms = [
        term for term in analysis.expansion_terms if normalize(term) not in main_keys
    ]

    candidates: list[Candidate] = []
    for doc_id in doc_ids:
        body = index.documents[doc_id].body
        hits: list[TermHits] = []
        main_count = 0
        expansion_count = 0
        for term in main_terms:
            offsets = naive_find(body, term)
            if offsets:
                hits.append(TermHits(term=term, kind=MAIN_KEYWORD, offsets=tuple(offsets)))
                main_count += len(offsets)
        for term in expansion_terms:
            offsets = naive_find(body, term)
            if offsets:
                hits.append(TermHits(term=term, kind=EXPANSION, offsets=tuple(offsets)))
                expansion_count += len(offsets)
        if main_count >= min_main_hits or expansion_count >= min_expansion_hits:
            candidates.append(
                Candidate(
                    doc_id=doc_id,
                    hits=hits,
                    main_hit_count=main_count,
                    expansion_hit_count=expansion_count,
                )
            )
    return candidates


def build_doc_graph(candidates: list[Candidate]) -> DocGraph:
    """Symmetric similarity graph: edge weight = distinct terms shared."""
    term_sets = {
        c.doc_id: {normalize(h.term) for h in c.hits} for c in candidates
    }
    nodes = [c.doc_id for c in candidates]
    edges: dict[tuple[str, str], float] = {}
    for i, a in enumerate(nodes):
        for b in nodes[i + 1:]:
            shared = len(term_sets[a] & term_sets[b])
            if shared > 0:
                edges[(a, b)] = float(shared)
                edges[(b, a)] = float(shared)
    return DocGraph(nodes=nodes, edges=edges)


def pagerank(
    graph: DocGraph,
    damping: float = 0.85,
    epsilon: float = 1e-8,
    max_iter: int = 100,
) -> dict[str, float]:
    """Weighted power iteration over the document graph.

    Transition probability out of a node is proportional to edge weight;
    nodes with no out-edges spread their mass uniformly over all nodes.
    """
    if not graph.nodes:
        raise EmptyGraph()
    nodes = sorted(graph.nodes)
    n = len(nodes)
    out_weight = {a: 0.0 for a in nodes}
    neighbors: dict[str, list[tuple[str, float]]] = {a: [] for a in nodes}
    for (a, b), w in graph.edges.items():
        out_weight[a] += w
        neighbors[a].append((b, w))
    for a in neighbors:
        neighbors[a].sort()

    scores = {a: 1.0 / n for a in nodes}
    for _ in range(max_iter):
        dangling = sum(scores[a] for a in nodes if out_weight[a] == 0.0)
        nxt = {a: (1.0 - damping) / n + damping * dangling / n for a in nodes}
        for a in nodes:
            if out_weight[a] > 0.0:
                share = damping * scores[a] / out_weight[a]
                for b, w in neighbors[a]:
                    nxt[b] += share * w
        delta = sum(abs(nxt[a] - scores[a]) for a in nodes)
        scores = nxt
        if delta < epsilon:
            break
    total = sum(scores.values())
    return {a: scores[a] / total for a in nodes}


def rank(
    candidates: list[Candidate],
    pagerank_scores: dict[str, float],
    analysis: QueryAnalysis,
    alpha: float = 0.5,
    expansion_weight: float = 0.5,
) -> list[RankedResult]:
    """Blend normalized term-hit weight with PageRank; main keywords dominate."""
    raw = {
        c.doc_id: c.main_hit_count + expansion_weight * c.expansion_hit_count
        for c in candidates
    }
    max_raw = max(raw.values(), default=0.0)
    results = []
    for c in candidates:
        term_score = raw[c.doc_id] / max_raw if max_raw > 0 else 0.0
        pr = pagerank_scores[c.doc_id]
        combined = alpha * term_score + (1.0 - alpha) * pr
        results.append((c.doc_id, term_score, pr, combined))
    results.sort(key=lambda r: (-r[3], r[0]))
    return [
        RankedResult(doc_id=d, term_score=ts, pagerank_score=pr, combined=cb, rank=i + 1)
        for i, (d, ts, pr, cb) in enumerate(results)
    ]
