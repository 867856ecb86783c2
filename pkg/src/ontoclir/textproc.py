"""Query-side text processing: tokenization, POS tagging, keyword extraction,
and the full query analysis that decides the search language.

The tagger is deliberately simple and fully deterministic: an exact-match
lexicon, then longest-matching suffix rule, then a NOUN default.  That is
enough to separate content words from function words in short questions,
which is all retrieval needs from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import languages
from .errors import EmptyQuery, FormatError, NoKeywords
from .languages import REGISTRY, classify_word, detect_language, nfc, normalize
from .ontology import OntologyTree

TAGS = frozenset(
    {
        "NOUN",
        "VERB",
        "PRONOUN",
        "ADPOSITION",
        "ADJECTIVE",
        "ADVERB",
        "DETERMINER",
        "QUESTION",
        "OTHER",
    }
)

KEYWORD_TAGS = frozenset({"NOUN", "VERB"})


@dataclass(frozen=True)
class Token:
    surface: str
    byte_offset: int
    script: str


@dataclass(frozen=True)
class TaggedToken:
    token: Token
    tag: str


@dataclass
class Lexicon:
    language: str
    entries: dict[str, str]
    suffix_rules: list[tuple[str, str]]  # kept sorted longest-suffix-first
    default_tag: str = "NOUN"

    def tag_word(self, surface: str) -> str:
        key = normalize(surface)
        if key in self.entries:
            return self.entries[key]
        for suffix, tag in self.suffix_rules:
            if key.endswith(suffix):
                return tag
        return self.default_tag


def load_lexicon(source: str, language: str) -> Lexicon:
    """Parse a lexicon file: ``surface<TAB>TAG`` lines plus ``@suffix`` and
    ``@default`` directives."""
    entries: dict[str, str] = {}
    suffix_rules: list[tuple[str, str]] = []
    default_tag = "NOUN"
    for line_no, line in enumerate(source.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if parts[0] == "@suffix":
            if len(parts) != 3:
                raise FormatError("@suffix needs suffix and tag", line_no)
            tag = parts[2].strip().upper()
            if tag not in TAGS:
                raise FormatError(f"unknown tag {tag!r}", line_no)
            suffix_rules.append((normalize(parts[1]), tag))
        elif parts[0] == "@default":
            if len(parts) != 2:
                raise FormatError("@default needs a tag", line_no)
            default_tag = parts[1].strip().upper()
            if default_tag not in TAGS:
                raise FormatError(f"unknown tag {default_tag!r}", line_no)
        else:
            if len(parts) != 2:
                raise FormatError("expected surface<TAB>TAG", line_no)
            tag = parts[1].strip().upper()
            if tag not in TAGS:
                raise FormatError(f"unknown tag {tag!r}", line_no)
            entries[normalize(parts[0])] = tag
    suffix_rules.sort(key=lambda rule: len(rule[0]), reverse=True)
    return Lexicon(language=language, entries=entries, suffix_rules=suffix_rules,
                   default_tag=default_tag)


def tokenize(text: str, lang: str | None = None) -> list[Token]:
    """Split on whitespace and punctuation; punctuation is dropped.

    Byte offsets index into the UTF-8 encoding of the NFC-normalized text.
    """
    text = nfc(text)
    tokens: list[Token] = []
    byte_pos = 0
    current: list[str] = []
    start_byte = 0

    def flush() -> None:
        nonlocal current
        if current:
            surface = "".join(current)
            tokens.append(Token(surface=surface, byte_offset=start_byte,
                                script=classify_word(surface)))
            current = []

    for ch in text:
        if ch.isalnum():
            if not current:
                start_byte = byte_pos
            current.append(ch)
        elif languages.is_tamil_char(ch):
            # Tamil signs/pulli are marks, not alphanumeric in all cases;
            # keep every Tamil-block code point inside the word.
            if not current:
                start_byte = byte_pos
            current.append(ch)
        else:
            flush()
        byte_pos += len(ch.encode("utf-8"))
    flush()
    return tokens


def pos_tag(tokens: list[Token], lexicon: Lexicon) -> list[TaggedToken]:
    """Tag every token; output order and length mirror the input."""
    return [TaggedToken(token=t, tag=lexicon.tag_word(t.surface)) for t in tokens]


def extract_keywords(tagged: list[TaggedToken]) -> list[str]:
    """Noun and verb surfaces in order, deduplicated; these drive the search."""
    out: list[str] = []
    seen: set[str] = set()
    for tt in tagged:
        if tt.tag in KEYWORD_TAGS:
            key = normalize(tt.token.surface)
            if key not in seen:
                seen.add(key)
                out.append(tt.token.surface)
    if not out:
        raise NoKeywords()
    return out


@dataclass
class QueryAnalysis:
    query_language: str
    keywords: list[str]
    matched_nodes: list[str]
    search_language: str
    expansion_terms: list[str]
    search_terms: list[str] = field(default_factory=list)
    dropped_keywords: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "query_language": self.query_language,
            "keywords": self.keywords,
            "matched_nodes": self.matched_nodes,
            "search_language": self.search_language,
            "expansion_terms": self.expansion_terms,
            "search_terms": self.search_terms,
            "dropped_keywords": self.dropped_keywords,
        }


def _match_ontology(tokens: list[Token], keyword_set: set[str], tree: OntologyTree,
                    lang: str) -> tuple[list[tuple[str, list[str]]], set[str]]:
    """Greedy longest-phrase ontology matching over the token stream.

    Returns (matched surface, node ids) pairs in stream order, plus the set of
    normalized token surfaces consumed by multi-word matches.
    """
    max_len = tree.max_phrase_tokens(lang)
    matches: list[tuple[str, list[str]]] = []
    consumed_by_phrase: set[str] = set()
    i = 0
    while i < len(tokens):
        hit = None
        for n in range(min(max_len, len(tokens) - i), 0, -1):
            span = tokens[i:i + n]
            phrase = " ".join(t.surface for t in span)
            # Single tokens must be keyword-bearing to count as a concept.
            if n == 1 and normalize(phrase) not in keyword_set:
                continue
            nodes = tree.lookup(phrase, lang)
            if nodes:
                hit = (phrase, nodes, n)
                break
        if hit:
            phrase, nodes, n = hit
            matches.append((phrase, nodes))
            if n > 1:
                consumed_by_phrase.update(normalize(t.surface) for t in tokens[i:i + n])
            i += n
        else:
            i += 1
    return matches, consumed_by_phrase


def analyze_query(
    query: str,
    declared_lang: str | None,
    tree: OntologyTree,
    lexicons: dict[str, Lexicon],
    use_ontology: bool = True,
) -> QueryAnalysis:
    """Full query analysis: language, keywords, concepts, search language,
    expansion terms, and the final search-term set.

    With ``use_ontology=False`` the ontology is bypassed entirely: no
    expansion, and the search language is pinned to the query language.
    """
    if not query or not query.strip():
        raise EmptyQuery()
    query_language = (
        REGISTRY.require(declared_lang) if declared_lang else detect_language(query)
    )
    tokens = tokenize(query, query_language)
    tagged = pos_tag(tokens, lexicons[query_language])
    keywords = extract_keywords(tagged)
    keyword_set = {normalize(k) for k in keywords}

    if not use_ontology:
        return QueryAnalysis(
            query_language=query_language,
            keywords=keywords,
            matched_nodes=[],
            search_language=query_language,
            expansion_terms=[],
            search_terms=list(keywords),
            dropped_keywords=[],
        )

    matches, consumed = _match_ontology(tokens, keyword_set, tree, query_language)

    matched_nodes: list[str] = []
    for _, nodes in matches:
        for nid in nodes:
            if nid not in matched_nodes:
                matched_nodes.append(nid)

    votes: dict[str, int] = {}
    for nid in matched_nodes:
        lang = tree.search_language(nid)
        votes[lang] = votes.get(lang, 0) + 1
    if votes:
        top = max(votes.values())
        winners = [lang for lang, n in votes.items() if n == top]
        search_language = winners[0] if len(winners) == 1 else query_language
    else:
        search_language = query_language

    matched_surfaces = {normalize(surface) for surface, _ in matches}

    # Main search terms: matched concepts rendered in the search language,
    # plus unmatched keywords carried through only monolingually.
    search_terms: list[str] = []
    seen_terms: set[str] = set()

    def add_term(term: str, into: list[str], seen: set[str]) -> None:
        key = normalize(term)
        if key and key not in seen:
            seen.add(key)
            into.append(term)

    for surface, _ in matches:
        if search_language == query_language:
            add_term(surface, search_terms, seen_terms)
        else:
            for translated in tree.translate_term(surface, query_language, search_language):
                add_term(translated, search_terms, seen_terms)

    dropped: list[str] = []
    for kw in keywords:
        key = normalize(kw)
        if key in matched_surfaces or key in consumed:
            continue
        if search_language == query_language:
            add_term(kw, search_terms, seen_terms)
        else:
            dropped.append(kw)

    expansion_terms: list[str] = []
    seen_expansion: set[str] = set()
    for nid in matched_nodes:
        for form in tree.expand(nid, search_language):
            add_term(form, expansion_terms, seen_expansion)
    for surface, _ in matches:
        for translated in tree.translate_term(surface, query_language, search_language):
            add_term(translated, expansion_terms, seen_expansion)

    return QueryAnalysis(
        query_language=query_language,
        keywords=keywords,
        matched_nodes=matched_nodes,
        search_language=search_language,
        expansion_terms=expansion_terms,
        search_terms=search_terms,
        dropped_keywords=dropped,
    )
