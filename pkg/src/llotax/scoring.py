"""Inherence scoring: synonym matches, category ranking, Fig-3-style rendering.

A synonym match records how often the synonym's words occur in the keyword
set (``occurrences``), how many words the synonym has (``word_count``),
and how many distinct words were found (``covered``).  From those counts:

* synonym inherence  = occurrences^(occurrences/word_count) * (occurrences/word_count)
* pertinence         = occurrences / total keywords
* relative inherence = sum over a category's synonyms of inherence * pertinence
* absolute inherence = sum over the root-to-node path of level * relative inherence

The ranked suggestion list normalizes absolute inherence so the top
category displays exactly 100.
"""

from __future__ import annotations

from dataclasses import dataclass

from .taxonomy import Synonym, TaxonomyForest, path_to_root
from .textpipe import KeywordSet

__all__ = [
    "SynonymMatch",
    "CategoryScore",
    "ZeroKeywords",
    "match_synonym",
    "synonym_power_kernel",
    "synonym_inherence",
    "pertinence",
    "relative_inherence",
    "absolute_inherence",
    "relevance_stats",
    "rank_categories",
    "render_suggestion",
    "render_suggestions",
]


class ZeroKeywords(Exception):
    """Scoring needs at least one valid keyword."""


@dataclass(frozen=True)
class SynonymMatch:
    """Match statistics of one synonym against one keyword set."""

    synonym: Synonym
    word_count: int      # words (or windows) making up the synonym
    occurrences: int     # total hits, counting keyword multiplicity
    covered: int         # distinct words (or windows) actually found

    def __post_init__(self) -> None:
        if self.word_count < 1:
            raise ValueError("word_count must be >= 1")
        if not 0 <= self.covered <= self.word_count:
            raise ValueError("covered must lie in [0, word_count]")
        if self.occurrences < self.covered:
            raise ValueError("occurrences cannot be below covered")

    @property
    def ratio(self) -> float:
        """Occurrences per synonym word; exceeds 1 on repeated hits."""
        return self.occurrences / self.word_count

    @property
    def coverage(self) -> float:
        """Fraction of the synonym's words found at least once."""
        return self.covered / self.word_count


def _count_runs(haystack: tuple[str, ...], needle: tuple[str, ...]) -> int:
    """Occurrences of ``needle`` as a contiguous (overlapping) run."""
    size = len(needle)
    if size == 0 or size > len(haystack):
        return 0
    return sum(1 for i in range(len(haystack) - size + 1) if haystack[i : i + size] == needle)


def match_synonym(syn: Synonym, kw: KeywordSet, window: int = 1) -> SynonymMatch:
    """Count the synonym's presence in the keyword set.

    With the default window of 1 each synonym word is counted on its own.
    A larger window splits the synonym into contiguous word runs of that
    length and counts each run's appearances in the keyword sequence; a
    synonym shorter than the window is matched as a single whole-phrase
    run.
    """
    if window <= 1:
        occurrences = sum(kw.count(word) for word in syn.words)
        covered = sum(1 for word in syn.words if kw.count(word) > 0)
        return SynonymMatch(syn, word_count=len(syn.words), occurrences=occurrences, covered=covered)
    size = min(window, len(syn.words))
    runs = [syn.words[i : i + size] for i in range(len(syn.words) - size + 1)]
    hits = [_count_runs(kw.order, run) for run in runs]
    return SynonymMatch(
        syn,
        word_count=len(runs),
        occurrences=sum(hits),
        covered=sum(1 for h in hits if h > 0),
    )


def synonym_power_kernel(match: SynonymMatch) -> float:
    """The raw power term occurrences^ratio; 0 when nothing matched.

    Deliberately flat across synonym sizes at one occurrence: a single hit
    scores 1 whether the synonym has one word or ten, which is why the
    inherence measure below multiplies in the ratio.
    """
    if match.occurrences == 0:
        return 0.0
    return float(match.occurrences) ** match.ratio


def synonym_inherence(match: SynonymMatch) -> float:
    """Per-synonym score: power kernel scaled by the occurrence ratio.

    A partial hit on a short synonym outranks the same hit on a longer
    one (1 of 3 scores 1/3, 1 of 4 scores 1/4), while full coverage of an
    n-word synonym scores exactly n.
    """
    if match.occurrences == 0:
        return 0.0
    return synonym_power_kernel(match) * match.ratio


def pertinence(match: SynonymMatch, total_keywords: int) -> float:
    """Matched-occurrence fraction of the whole keyword set."""
    if total_keywords < 1:
        raise ZeroKeywords("pertinence needs a non-empty keyword set")
    return match.occurrences / total_keywords


def relative_inherence(matches: tuple[SynonymMatch, ...] | list[SynonymMatch], total_keywords: int) -> float:
    """Category score against one keyword set: sum of inherence * pertinence."""
    if total_keywords < 1:
        raise ZeroKeywords("relative inherence needs a non-empty keyword set")
    return sum(synonym_inherence(m) * pertinence(m, total_keywords) for m in matches)


def absolute_inherence(forest: TaxonomyForest, code: str, rel: dict[str, float]) -> float:
    """Depth-weighted sum of relative inherence along the root-to-node path.

    The root contributes with weight 1, the node itself with its depth, so
    deep categories inherit their ancestors' evidence.
    """
    return sum(level * rel.get(step, 0.0) for level, step in enumerate(path_to_root(forest, code), start=1))


def relevance_stats(matches, kw: KeywordSet) -> tuple[float, float]:
    """(max single-term relevance, total relevance) over matched keywords.

    Each distinct matched keyword counts once in the total, even when it
    belongs to several synonyms.
    """
    if kw.total < 1:
        raise ZeroKeywords("relevance needs a non-empty keyword set")
    found = {word for m in matches for word in m.synonym.words if kw.count(word) > 0}
    if not found:
        return 0.0, 0.0
    counts = [kw.count(word) for word in found]
    return max(counts) / kw.total, sum(counts) / kw.total


@dataclass(frozen=True)
class CategoryScore:
    """One row of the ranked suggestion list."""

    code: str
    label: str
    depth: int
    matches: tuple[SynonymMatch, ...]
    relative_inherence: float
    absolute_inherence: float
    hin: float                      # normalized score in (0, 100]
    rel_max: float                  # fractions, rendered as percentages
    rel_tot: float
    matched_keywords: tuple[str, ...]


def _matched_display(matches: tuple[SynonymMatch, ...], kw: KeywordSet, total: int) -> tuple[str, ...]:
    """Display strings for the matched synonyms, strongest first.

    A fully covered synonym displays as its whole phrase; a partial match
    shows just the words that were found.
    """
    weighted = sorted(
        matches,
        key=lambda m: (-synonym_inherence(m) * pertinence(m, total), m.synonym.phrase),
    )
    display: list[str] = []
    for m in weighted:
        found = " ".join(word for word in m.synonym.words if kw.count(word) > 0) or m.synonym.phrase
        if found not in display:
            display.append(found)
    return tuple(display)


def rank_categories(forest: TaxonomyForest, kw: KeywordSet, window: int = 1) -> list[CategoryScore]:
    """Score every category and return the ranked suggestion list.

    Categories with zero absolute inherence are omitted; the rest are
    sorted by normalized score descending, ties broken by code.  The top
    entry always carries hin == 100.0 exactly.
    """
    if not forest.categories:
        return []
    if kw.total < 1:
        raise ZeroKeywords("cannot rank categories without keywords")

    matches_by_code: dict[str, tuple[SynonymMatch, ...]] = {}
    rel: dict[str, float] = {}
    for code, cat in forest.categories.items():
        matched = tuple(match_synonym(syn, kw, window) for syn in sorted(cat.thesaurus))
        matches_by_code[code] = matched
        rel[code] = relative_inherence(matched, kw.total)

    raw: list[tuple[str, float]] = []
    for code in forest.categories:
        absolute = absolute_inherence(forest, code, rel)
        if absolute > 0.0:
            raw.append((code, absolute))
    if not raw:
        return []

    top = max(absolute for _, absolute in raw)
    scores = []
    for code, absolute in raw:
        hits = tuple(m for m in matches_by_code[code] if m.occurrences > 0)
        rel_max, rel_tot = relevance_stats(hits, kw)
        scores.append(
            CategoryScore(
                code=code,
                label=forest.categories[code].label,
                depth=forest.depth(code),
                matches=hits,
                relative_inherence=rel[code],
                absolute_inherence=absolute,
                hin=100.0 * absolute / top,
                rel_max=rel_max,
                rel_tot=rel_tot,
                matched_keywords=_matched_display(hits, kw, kw.total),
            )
        )
    scores.sort(key=lambda s: (-s.hin, s.code))
    return scores


def _format_hin(value: float) -> str:
    rounded = round(value, 1)
    if rounded == int(rounded):
        return str(int(rounded))
    return f"{rounded:.1f}"


def _format_pct(fraction: float) -> str:
    return f"{100.0 * fraction:.1f}%"


def render_suggestion(score: CategoryScore) -> str:
    """One suggestion line in the cataloging UI's list format."""
    keywords = " ".join(f"'{kw}'" for kw in score.matched_keywords)
    return (
        f"{score.code} - {score.label} (keywords: {keywords}) "
        f"(Hin Value: {_format_hin(score.hin)}) "
        f"Relevance: (max:{_format_pct(score.rel_max)} | (Tot:{_format_pct(score.rel_tot)})"
    )


def render_suggestions(scores: list[CategoryScore]) -> list[str]:
    return [render_suggestion(score) for score in scores]
