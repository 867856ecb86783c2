"""Document collection: ingestion from a directory tree and JSONL persistence.

Layout convention: ``corpus/en/*.txt``, ``corpus/ta/*.txt``.  The immediate
subdirectory names the language; files elsewhere fall back to script
detection on the content.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DuplicateId, EmptyFile, EmptyQuery, FormatError, InvalidUtf8
from .languages import REGISTRY, detect_language, nfc

INDEX_FORMAT = "ontoclir-corpus"
INDEX_VERSION = 1


@dataclass(frozen=True)
class Document:
    id: str
    language: str
    title: str
    body: str  # NFC-normalized
    source: str


@dataclass
class CorpusIndex:
    documents: dict[str, Document] = field(default_factory=dict)
    by_language: dict[str, list[str]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.documents)

    def add(self, doc: Document) -> None:
        if doc.id in self.documents:
            raise DuplicateId(doc.id)
        self.documents[doc.id] = doc
        ids = self.by_language.setdefault(doc.language, [])
        ids.append(doc.id)
        ids.sort()


def _doc_language(path: Path, root: Path, body: str) -> str:
    rel = path.relative_to(root)
    if len(rel.parts) > 1 and rel.parts[0].lower() in REGISTRY:
        return rel.parts[0].lower()
    try:
        return detect_language(body)
    except EmptyQuery:  # pragma: no cover - empty bodies rejected earlier
        return REGISTRY.codes()[0]


def ingest(root: str | Path) -> CorpusIndex:
    """One Document per ``*.txt`` file under *root*; deterministic order.

    The document id is the extension-less relative path; the title is the
    first non-empty line.
    """
    root = Path(root)
    index = CorpusIndex()
    for path in sorted(root.rglob("*.txt")):
        raw = path.read_bytes()
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError:
            raise InvalidUtf8(str(path))
        body = nfc(text)
        if not body.strip():
            raise EmptyFile(str(path))
        rel = path.relative_to(root)
        doc_id = rel.with_suffix("").as_posix()
        title = next((line.strip() for line in body.splitlines() if line.strip()), doc_id)
        index.add(
            Document(
                id=doc_id,
                language=_doc_language(path, root, body),
                title=title,
                body=body,
                source=str(path),
            )
        )
    return index


def save_index(index: CorpusIndex) -> str:
    """JSONL: one header line, then one document object per line."""
    lines = [json.dumps({"format": INDEX_FORMAT, "version": INDEX_VERSION})]
    for doc_id in sorted(index.documents):
        doc = index.documents[doc_id]
        lines.append(
            json.dumps(
                {
                    "id": doc.id,
                    "language": doc.language,
                    "title": doc.title,
                    "body": doc.body,
                    "source": doc.source,
                },
                ensure_ascii=False,
            )
        )
    return "\n".join(lines) + "\n"


def load_index(content: str) -> CorpusIndex:
    lines = content.splitlines()
    if not lines:
        raise FormatError("empty index file", 1)
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError:
        raise FormatError("unreadable header", 1)
    if not isinstance(header, dict) or header.get("format") != INDEX_FORMAT:
        raise FormatError("not an ontoclir corpus index", 1)
    if header.get("version") != INDEX_VERSION:
        raise FormatError(f"unsupported version {header.get('version')!r}", 1)
    index = CorpusIndex()
    for line_no, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError:
            raise FormatError("unreadable document record", line_no)
        try:
            doc = Document(
                id=obj["id"],
                language=obj["language"],
                title=obj["title"],
                body=obj["body"],
                source=obj.get("source", ""),
            )
        except (KeyError, TypeError):
            raise FormatError("document record missing fields", line_no)
        index.add(doc)
    return index
