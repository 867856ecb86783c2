"""Answer extraction: sentence splitting, passage selection, consolidation,
and ontology-gloss translation back into the query language.

Translation is intentionally a word-by-word ontology gloss (longest
multi-word concept first); anything outside the ontology passes through
verbatim and is reported so the caller can flag it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .languages import normalize
from .errors import NoPassages
from .ontology import OntologyTree
from .retrieval import RankedResult
from .textproc import QueryAnalysis, tokenize

SENTENCE_TERMINATORS = ".!?।"  # includes danda

# Word + trailing terminator sequences that do not end a sentence.
ABBREVIATIONS = {"mr.", "mrs.", "dr.", "st.", "prof.", "e.g.", "i.e.", "etc."}


@dataclass(frozen=True)
class Passage:
    doc_id: str
    sentence_index: int
    text: str
    matched_terms: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "sentence_index": self.sentence_index,
            "text": self.text,
            "matched_terms": list(self.matched_terms),
        }


@dataclass
class Answer:
    passages: list[Passage]
    answer_language: str
    translated: bool
    untranslated_terms: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "passages": [p.to_dict() for p in self.passages],
            "answer_language": self.answer_language,
            "translated": self.translated,
            "untranslated_terms": self.untranslated_terms,
        }


def split_sentences(body: str, lang: str | None = None) -> list[str]:
    """Split on terminators followed by whitespace or end of text.

    A terminator stays attached to its sentence; a short abbreviation list
    guards against false splits.
    """
    sentences: list[str] = []
    start = 0
    i = 0
    n = len(body)
    while i < n:
        ch = body[i]
        if ch in SENTENCE_TERMINATORS and (i + 1 >= n or body[i + 1].isspace()):
            tail = body[start:i + 1].rstrip()
            last_word = tail.split()[-1].lower() if tail.split() else ""
            if last_word in ABBREVIATIONS:
                i += 1
                continue
            chunk = body[start:i + 1].strip()
            if chunk:
                sentences.append(chunk)
            start = i + 1
        i += 1
    trailing = body[start:].strip()
    if trailing:
        sentences.append(trailing)
    return sentences


def _contains(sentence: str, term: str) -> bool:
    return normalize(term) in normalize(sentence)


def extract_passages(
    ranked: list[RankedResult],
    bodies: dict[str, str],
    analysis: QueryAnalysis,
    top_k: int = 5,
) -> list[Passage]:
    """Qualifying sentences of the top-K ranked documents, in (rank,
    sentence) order.

    A sentence qualifies when it contains at least one main search term, or
    at least two distinct expansion terms.
    """
    main_keys = {normalize(t) for t in analysis.search_terms}
    expansion_only = [
        t for t in analysis.expansion_terms if normalize(t) not in main_keys
    ]
    passages: list[Passage] = []
    for result in ranked[:top_k]:
        body = bodies[result.doc_id]
        for idx, sentence in enumerate(split_sentences(body, analysis.search_language)):
            matched = [t for t in analysis.search_terms if _contains(sentence, t)]
            expansion_matched = [t for t in expansion_only if _contains(sentence, t)]
            if matched or len(expansion_matched) >= 2:
                passages.append(
                    Passage(
                        doc_id=result.doc_id,
                        sentence_index=idx,
                        text=sentence,
                        matched_terms=tuple(matched + expansion_matched),
                    )
                )
    if not passages:
        raise NoPassages()
    return passages


def _token_set(text: str) -> frozenset[str]:
    return frozenset(normalize(t.surface) for t in tokenize(text))


def _jaccard(a: frozenset[str], b: frozenset[str]) -> float:
    if not a and not b:
        return 1.0
    return len(a & b) / len(a | b)


def consolidate(
    passages: list[Passage],
    jaccard_threshold: float = 0.8,
    max_passages: int = 5,
) -> list[Passage]:
    """Drop exact and near-duplicate passages, keeping first occurrences."""
    kept: list[Passage] = []
    kept_texts: set[str] = set()
    kept_sets: list[frozenset[str]] = []
    for passage in passages:
        key = normalize(passage.text)
        if key in kept_texts:
            continue
        tokens = _token_set(passage.text)
        if any(_jaccard(tokens, earlier) >= jaccard_threshold for earlier in kept_sets):
            continue
        kept.append(passage)
        kept_texts.add(key)
        kept_sets.append(tokens)
        if len(kept) >= max_passages:
            break
    return kept


def _translate_text(
    text: str, from_lang: str, to_lang: str, tree: OntologyTree,
    untranslated: list[str],
) -> str:
    """Greedy longest-concept gloss; unknown words pass through verbatim."""
    chunks = text.split()
    max_len = tree.max_phrase_tokens(from_lang)

    def core(chunk: str) -> str:
        return chunk.strip(".,!?;:()[]\"'।")

    out: list[str] = []
    i = 0
    while i < len(chunks):
        hit = None
        for n in range(min(max_len, len(chunks) - i), 0, -1):
            phrase = " ".join(core(c) for c in chunks[i:i + n])
            if not phrase:
                continue
            translations = tree.translate_term(phrase, from_lang, to_lang)
            if translations:
                hit = (translations[0], n)
                break
        if hit:
            out.append(hit[0])
            i += hit[1]
        else:
            chunk = chunks[i]
            out.append(chunk)
            word = core(chunk)
            if word and any(c.isalpha() or c.isalnum() for c in word):
                if word not in untranslated:
                    untranslated.append(word)
            i += 1
    return " ".join(out)


def translate_answer(
    passages: list[Passage],
    from_lang: str,
    to_lang: str,
    tree: OntologyTree,
) -> Answer:
    """Render passages in the user's language via the ontology gloss."""
    if from_lang == to_lang:
        return Answer(
            passages=list(passages),
            answer_language=to_lang,
            translated=False,
            untranslated_terms=[],
        )
    untranslated: list[str] = []
    translated_passages = [
        Passage(
            doc_id=p.doc_id,
            sentence_index=p.sentence_index,
            text=_translate_text(p.text, from_lang, to_lang, tree, untranslated),
            matched_terms=p.matched_terms,
        )
        for p in passages
    ]
    return Answer(
        passages=translated_passages,
        answer_language=to_lang,
        translated=True,
        untranslated_terms=untranslated,
    )
