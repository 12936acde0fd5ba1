"""Keyword extraction pipeline: normalize, tokenize, drop stopwords, stem.

The pipeline turns free text (a title plus a description) into the multiset
of keywords that drives all category scoring.  Every stage is a pure
function, so the same text always yields the same keyword set.
"""

from __future__ import annotations

import string
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Mapping, Sequence

__all__ = [
    "KeywordSet",
    "DEFAULT_STOPWORDS",
    "normalize_text",
    "tokenize",
    "filter_stopwords",
    "stem_token",
    "extract_keywords",
    "load_stopwords",
]

# Characters replaced by a space during normalization.  ASCII punctuation
# plus the common typographic variants (curly quotes, dashes, ellipsis).
_STRIP_CHARS = frozenset(string.punctuation) | frozenset("«»‘’“”–—…‹›·•¡¿")

_STRIP_TABLE = {ord(ch): " " for ch in _STRIP_CHARS}


def normalize_text(raw: str) -> str:
    """Lowercase ``raw``, blank out punctuation, and collapse whitespace."""
    cleaned = raw.lower().translate(_STRIP_TABLE)
    return " ".join(cleaned.split())


def tokenize(normalized: str) -> list[str]:
    """Split normalized text into word tokens.

    Tokens are the maximal non-space runs, in order of appearance.
    Purely numeric runs are not words and are dropped.
    """
    return [tok for tok in normalized.split() if not tok.isdigit()]


def filter_stopwords(tokens: Iterable[str], stop: frozenset[str]) -> list[str]:
    """Remove stopwords, preserving order and multiplicity of the rest."""
    return [tok for tok in tokens if tok not in stop]


def stem_token(tok: str) -> str:
    """Reduce a plural form to its singular via a fixed suffix table.

    The first matching rule wins.  Words ending in "ss", "is", or "us" keep
    their trailing "s" (glass, analysis, continuous), and a stem shorter
    than three characters is never produced (gas stays gas).
    """
    if tok.endswith("ies") and len(tok) > 4:
        return tok[:-3] + "y"
    if tok.endswith("sses"):
        return tok[:-2]
    if tok.endswith("es") and len(tok) - 2 >= 3:
        return tok[:-2]
    if tok.endswith("s") and not tok.endswith(("ss", "is", "us")) and len(tok) - 1 >= 3:
        return tok[:-1]
    return tok


@dataclass(frozen=True)
class KeywordSet:
    """The filtered keyword multiset of a title+description.

    ``counts`` maps each stemmed keyword to its occurrence count, ``total``
    is the number of valid keywords including repeats, and ``order`` keeps
    the keywords in appearance order for phrase-window matching.
    """

    counts: Mapping[str, int] = field(default_factory=dict)
    total: int = 0
    order: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.total != sum(self.counts.values()):
            raise ValueError("total must equal the sum of keyword counts")

    def count(self, token: str) -> int:
        return self.counts.get(token, 0)


def clean_phrase(phrase: str, stop: frozenset[str]) -> list[str]:
    """Run one phrase through the full pipeline, returning surviving tokens.

    Shared by keyword extraction and thesaurus loading so that synonyms and
    text are matched in the same normalized, stemmed form.  Tokens whose
    stemmed form lands on a stopword are dropped as well, keeping the
    output stopword-free.
    """
    tokens = filter_stopwords(tokenize(normalize_text(phrase)), stop)
    stemmed = [stem_token(tok) for tok in tokens]
    return [tok for tok in stemmed if tok not in stop]


def extract_keywords(title: str, description: str, stop: frozenset[str] | None = None) -> KeywordSet:
    """Build the keyword set of a title+description pair.

    Title and description words carry equal weight; both fields empty
    yields an empty keyword set (total 0).
    """
    if stop is None:
        stop = DEFAULT_STOPWORDS
    kept = clean_phrase(title + " " + description, stop)
    return KeywordSet(counts=dict(Counter(kept)), total=len(kept), order=tuple(kept))


def load_stopwords(source: str | Iterable[str]) -> frozenset[str]:
    """Parse a stopword file: one word per line, ``#`` comments, blanks skipped."""
    lines: Sequence[str]
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = list(source)
    words = set()
    for line in lines:
        entry = line.strip()
        if not entry or entry.startswith("#"):
            continue
        words.add(entry.lower())
    return frozenset(words)


def load_stopwords_file(path: str) -> frozenset[str]:
    with open(path, encoding="utf-8") as handle:
        return load_stopwords(handle.read())


def _load_default_stopwords() -> frozenset[str]:
    text = resources.files("llotax.data").joinpath("stopwords.txt").read_text("utf-8")
    return load_stopwords(text)


DEFAULT_STOPWORDS: frozenset[str] = _load_default_stopwords()
