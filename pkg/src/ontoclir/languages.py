"""Language registry and Unicode text helpers.

All string comparison in the engine goes through :func:`normalize`: NFC
composition everywhere, case folding only for Latin-script characters
(Tamil has no case, and folding other scripts would be a silent surprise).
"""

from __future__ import annotations

import unicodedata

from .errors import EmptyQuery, UnknownLanguage

EN = "en"
TA = "ta"

# Script classes used for tokens and language detection.
LATIN = "LATIN"
TAMIL = "TAMIL"
DIGIT = "DIGIT"
OTHER = "OTHER"

_TAMIL_LO = 0x0B80
_TAMIL_HI = 0x0BFF


class LanguageRegistry:
    """Global registry of language codes; extensible beyond the bundled en/ta."""

    def __init__(self, codes=(EN, TA)):
        self._codes: list[str] = []
        for code in codes:
            self.register(code)

    def register(self, code: str) -> None:
        code = code.lower()
        if code not in self._codes:
            self._codes.append(code)

    def require(self, code: str) -> str:
        code = code.lower()
        if code not in self._codes:
            raise UnknownLanguage(code)
        return code

    def __contains__(self, code: str) -> bool:
        return code.lower() in self._codes

    def codes(self) -> list[str]:
        return list(self._codes)


REGISTRY = LanguageRegistry()


def nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)


def is_tamil_char(ch: str) -> bool:
    return _TAMIL_LO <= ord(ch) <= _TAMIL_HI


def is_latin_letter(ch: str) -> bool:
    if not ch.isalpha():
        return False
    return ord(ch) < 0x0250  # Basic Latin through Latin Extended-B


def fold(text: str) -> str:
    """Lowercase Latin letters only; other scripts pass through unchanged."""
    return "".join(c.lower() if is_latin_letter(c) else c for c in text)


def normalize(text: str) -> str:
    """Canonical comparison form: NFC plus Latin-only lowercasing."""
    return fold(nfc(text))


def script_of(ch: str) -> str:
    if is_tamil_char(ch):
        return TAMIL
    if is_latin_letter(ch):
        return LATIN
    if ch.isdigit():
        return DIGIT
    return OTHER


def classify_word(word: str) -> str:
    """Majority script class of a word, ties broken TAMIL > LATIN > DIGIT > OTHER."""
    counts = {TAMIL: 0, LATIN: 0, DIGIT: 0, OTHER: 0}
    for ch in word:
        counts[script_of(ch)] += 1
    return max((TAMIL, LATIN, DIGIT, OTHER), key=lambda s: counts[s])


def detect_language(text: str) -> str:
    """Detect the query language from script statistics.

    Tamil wins when Tamil-block code points strictly outnumber Latin letters.
    """
    if not text or not text.strip():
        raise EmptyQuery()
    tamil = sum(1 for c in text if is_tamil_char(c))
    latin = sum(1 for c in text if is_latin_letter(c))
    return TA if tamil > latin else EN
