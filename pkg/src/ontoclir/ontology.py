"""Multilingual ontology tree.

The tree is the single source for three jobs: deciding which language a
concept "belongs" to (its root language), expanding a concept into related
terms from its descendants, and translating terms between languages.

File format (UTF-8, one record per line, tab-separated):

    node-id<TAB>parent-id-or-"-"<TAB>root-language<TAB>lang=form|form;lang=form

Lines starting with ``#`` are comments.  Child order is file order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    CycleDetected,
    DanglingParentReference,
    DuplicateNodeId,
    EmptySurfaceForm,
    FormatError,
    MissingLanguageEntry,
    UnknownNode,
)
from .languages import REGISTRY, LanguageRegistry, nfc, normalize


@dataclass(frozen=True)
class OntologyNode:
    id: str
    parent: str | None
    children: tuple[str, ...]
    entries: dict[str, tuple[str, ...]]  # language -> surface forms, NFC
    root_language: str


@dataclass
class OntologyTree:
    """Immutable after load; safe for concurrent readers."""

    nodes: dict[str, OntologyNode]
    root: str
    term_index: dict[tuple[str, str], list[str]] = field(default_factory=dict)

    def lookup(self, term: str, lang: str) -> list[str]:
        """All node ids whose entries in *lang* contain the normalized term."""
        return list(self.term_index.get((lang, normalize(term)), ()))

    def search_language(self, node_id: str) -> str:
        node = self.nodes.get(node_id)
        if node is None:
            raise UnknownNode(node_id)
        return node.root_language

    def expand(self, node_id: str, lang: str) -> list[str]:
        """Surface forms (in *lang*) of every descendant of the node, pre-order.

        The node's own forms are excluded; duplicates keep first occurrence.
        """
        if node_id not in self.nodes:
            raise UnknownNode(node_id)
        lang = REGISTRY.require(lang)
        out: list[str] = []
        seen: set[str] = set()

        def visit(nid: str) -> None:
            for form in self.nodes[nid].entries.get(lang, ()):
                key = normalize(form)
                if key not in seen:
                    seen.add(key)
                    out.append(form)
            for child in self.nodes[nid].children:
                visit(child)

        for child in self.nodes[node_id].children:
            visit(child)
        return out

    def translate_term(self, term: str, from_lang: str, to_lang: str) -> list[str]:
        """First surface form in *to_lang* of every node matching *term*."""
        if from_lang == to_lang:
            return [term]
        out: list[str] = []
        seen: set[str] = set()
        for nid in self.lookup(term, from_lang):
            forms = self.nodes[nid].entries.get(to_lang, ())
            if forms:
                key = normalize(forms[0])
                if key not in seen:
                    seen.add(key)
                    out.append(forms[0])
        return out

    def max_phrase_tokens(self, lang: str) -> int:
        """Longest surface form in *lang*, measured in whitespace tokens."""
        best = 1
        for (index_lang, form) in self.term_index:
            if index_lang == lang:
                best = max(best, len(form.split()))
        return best

    def all_terms(self, lang: str) -> list[str]:
        return sorted(form for (index_lang, form) in self.term_index if index_lang == lang)


def _parse_entries(raw: str, node_id: str, line_no: int) -> dict[str, tuple[str, ...]]:
    entries: dict[str, tuple[str, ...]] = {}
    for chunk in raw.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise FormatError(f"bad entry {chunk!r} in node {node_id!r}", line_no)
        lang, forms_raw = chunk.split("=", 1)
        lang = lang.strip().lower()
        forms = tuple(nfc(f.strip()) for f in forms_raw.split("|"))
        if any(not f for f in forms) or not forms:
            raise EmptySurfaceForm(node_id)
        entries[lang] = forms
    return entries


def load_tree(source: str, registry: LanguageRegistry = REGISTRY) -> OntologyTree:
    """Parse and validate an ontology file; raises on any invariant violation."""
    records: list[tuple[str, str | None, str, dict[str, tuple[str, ...]]]] = []
    seen_ids: set[str] = set()
    for line_no, line in enumerate(source.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise FormatError(f"expected 4 tab-separated fields, got {len(parts)}", line_no)
        node_id, parent_raw, root_lang, entries_raw = (p.strip() for p in parts)
        if not node_id:
            raise FormatError("empty node id", line_no)
        if node_id in seen_ids:
            raise DuplicateNodeId(node_id)
        seen_ids.add(node_id)
        parent = None if parent_raw == "-" else parent_raw
        entries = _parse_entries(entries_raw, node_id, line_no)
        records.append((node_id, parent, root_lang.lower(), entries))

    if not records:
        raise FormatError("ontology file contains no nodes")

    by_id = {rec[0]: rec for rec in records}

    # Parent links must resolve before any structural check.
    for node_id, parent, _, _ in records:
        if parent is not None and parent not in by_id:
            raise DanglingParentReference(node_id, parent)

    # Cycle check by walking parent chains.
    cleared: set[str] = set()
    for node_id, _, _, _ in records:
        chain: list[str] = []
        on_chain: set[str] = set()
        current: str | None = node_id
        while current is not None and current not in cleared:
            if current in on_chain:
                raise CycleDetected(current)
            on_chain.add(current)
            chain.append(current)
            current = by_id[current][1]
        cleared.update(chain)

    roots = [rec[0] for rec in records if rec[1] is None]
    if len(roots) != 1:
        raise FormatError(f"expected exactly one root node, found {len(roots)}")

    for node_id, _, root_lang, entries in records:
        registry.require(root_lang)
        for lang in registry.codes():
            if lang not in entries:
                raise MissingLanguageEntry(node_id, lang)

    children: dict[str, list[str]] = {rec[0]: [] for rec in records}
    for node_id, parent, _, _ in records:
        if parent is not None:
            children[parent].append(node_id)

    nodes = {
        node_id: OntologyNode(
            id=node_id,
            parent=parent,
            children=tuple(children[node_id]),
            entries=entries,
            root_language=root_lang,
        )
        for node_id, parent, root_lang, entries in records
    }

    term_index: dict[tuple[str, str], list[str]] = {}
    for node_id, _, _, entries in records:
        for lang, forms in entries.items():
            for form in forms:
                term_index.setdefault((lang, normalize(form)), [])
                if node_id not in term_index[(lang, normalize(form))]:
                    term_index[(lang, normalize(form))].append(node_id)

    return OntologyTree(nodes=nodes, root=roots[0], term_index=term_index)


def save_tree(tree: OntologyTree) -> str:
    """Serialize back to the line format; load(save(t)) is structurally equal."""
    lines: list[str] = []

    def emit(node_id: str) -> None:
        node = tree.nodes[node_id]
        entries = ";".join(
            f"{lang}={'|'.join(forms)}" for lang, forms in node.entries.items()
        )
        lines.append(
            "\t".join([node.id, node.parent or "-", node.root_language, entries])
        )
        for child in node.children:
            emit(child)

    emit(tree.root)
    return "\n".join(lines) + "\n"
