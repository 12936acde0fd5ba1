"""Category forest with per-category thesauri, DDC-style dotted codes.

Categories form a forest: every tree is a subject area, roots sit at
depth 1, and each category carries a thesaurus of synonyms.  A synonym is
an ordered word phrase, stored in the same normalized/stemmed form the
keyword pipeline produces, so thesaurus and text match term-for-term.

Forests are immutable values: mutation helpers return a new forest.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .textpipe import DEFAULT_STOPWORDS, clean_phrase

__all__ = [
    "Synonym",
    "Category",
    "TaxonomyForest",
    "ValidationReport",
    "TaxonomyError",
    "ParseError",
    "ValidationError",
    "UnknownCategory",
    "EmptySynonym",
    "parse_taxonomy",
    "load_taxonomy_file",
    "validate_forest",
    "path_to_root",
    "upsert_synonym",
    "serialize_taxonomy",
]


class TaxonomyError(Exception):
    """Base class for taxonomy failures."""


class ParseError(TaxonomyError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class ValidationError(TaxonomyError):
    def __init__(self, findings: list[str]):
        super().__init__("; ".join(findings))
        self.findings = findings


class UnknownCategory(TaxonomyError):
    def __init__(self, code: str):
        super().__init__(f"unknown category code: {code!r}")
        self.code = code


class EmptySynonym(TaxonomyError):
    """Raised when nothing of a synonym phrase survives the text pipeline."""


@dataclass(frozen=True, order=True)
class Synonym:
    """An ordered, stemmed, stopword-free word phrase."""

    words: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.words:
            raise ValueError("a synonym needs at least one word")

    @property
    def phrase(self) -> str:
        return " ".join(self.words)


@dataclass(frozen=True)
class Category:
    code: str
    label: str
    parent: str | None = None
    thesaurus: frozenset[Synonym] = frozenset()


@dataclass(frozen=True)
class TaxonomyForest:
    categories: dict[str, Category] = field(default_factory=dict)

    @property
    def roots(self) -> set[str]:
        return {code for code, cat in self.categories.items() if cat.parent is None}

    def __contains__(self, code: str) -> bool:
        return code in self.categories

    def __len__(self) -> int:
        return len(self.categories)

    def get(self, code: str) -> Category:
        try:
            return self.categories[code]
        except KeyError:
            raise UnknownCategory(code) from None

    def depth(self, code: str) -> int:
        return len(path_to_root(self, code))


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        """True when the forest invariants hold (warnings allowed)."""
        return not self.errors


def make_synonym(phrase: str, stop: frozenset[str] | None = None) -> Synonym:
    """Normalize/stem/stopword-filter a phrase into a Synonym.

    Raises EmptySynonym when nothing survives the pipeline.
    """
    if stop is None:
        stop = DEFAULT_STOPWORDS
    words = clean_phrase(phrase, stop)
    if not words:
        raise EmptySynonym(f"nothing survives filtering of {phrase!r}")
    return Synonym(tuple(words))


def parse_taxonomy(source: str, stop: frozenset[str] | None = None) -> TaxonomyForest:
    """Parse the taxonomy line format into a validated forest.

    Each line reads ``code|parent or -|label|syn1;syn2;...``; ``#`` starts
    a comment.  Synonym phrases are run through the keyword pipeline here,
    so the stored thesaurus is directly matchable against extracted
    keywords.
    """
    if stop is None:
        stop = DEFAULT_STOPWORDS
    categories: dict[str, Category] = {}
    duplicates: list[str] = []
    for line_no, line in enumerate(source.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split("|")
        if len(fields) != 4:
            raise ParseError(line_no, f"expected 4 '|'-separated fields, got {len(fields)}")
        code, parent, label, syn_field = (f.strip() for f in fields)
        if not code:
            raise ParseError(line_no, "empty category code")
        synonyms = set()
        for phrase in syn_field.split(";"):
            if not phrase.strip():
                continue
            try:
                synonyms.add(make_synonym(phrase, stop))
            except EmptySynonym:
                # A phrase swallowed whole by the stopword list behaves like
                # an empty thesaurus entry: it can never match, so drop it
                # rather than reject the file.
                continue
        if code in categories:
            duplicates.append(f"duplicate category code {code!r}")
        categories[code] = Category(
            code=code,
            label=label,
            parent=parent if parent != "-" else None,
            thesaurus=frozenset(synonyms),
        )
    forest = TaxonomyForest(categories)
    report = validate_forest(forest)
    errors = duplicates + list(report.errors)
    if errors:
        raise ValidationError(errors)
    return forest


def load_taxonomy_file(path: str, stop: frozenset[str] | None = None) -> TaxonomyForest:
    with open(path, encoding="utf-8") as handle:
        return parse_taxonomy(handle.read(), stop)


def validate_forest(forest: TaxonomyForest) -> ValidationReport:
    """Check the forest invariants; findings go in the report, not raised.

    Empty thesauri are reported as warnings: such categories are legal,
    they simply never match anything.
    """
    errors: list[str] = []
    warnings: list[str] = []
    for code, cat in forest.categories.items():
        if cat.code != code:
            errors.append(f"category stored under {code!r} carries code {cat.code!r}")
        if cat.parent is not None and cat.parent not in forest.categories:
            errors.append(f"{code}: parent {cat.parent!r} does not exist")
        if "|" in cat.label or "\n" in cat.label:
            errors.append(f"{code}: label contains a reserved character")
        if not cat.thesaurus:
            warnings.append(f"{code}: empty thesaurus (category can never match)")
    # Cycle check: walk up from every node; a walk longer than the forest
    # has nodes must have looped.
    for code in forest.categories:
        seen = {code}
        current = forest.categories[code].parent
        while current is not None and current in forest.categories:
            if current in seen:
                errors.append(f"cycle in parent links at {current!r}")
                break
            seen.add(current)
            current = forest.categories[current].parent
    return ValidationReport(errors=tuple(dict.fromkeys(errors)), warnings=tuple(warnings))


def path_to_root(forest: TaxonomyForest, code: str) -> list[str]:
    """Return [root, ..., code]; its length is the category's depth."""
    if code not in forest.categories:
        raise UnknownCategory(code)
    path = [code]
    current = forest.categories[code].parent
    while current is not None:
        if current not in forest.categories:
            raise ValidationError([f"{path[-1]}: parent {current!r} does not exist"])
        if current in path:
            raise ValidationError([f"cycle in parent links at {current!r}"])
        path.append(current)
        current = forest.categories[current].parent
    path.reverse()
    return path


def upsert_synonym(
    forest: TaxonomyForest,
    code: str,
    phrase: str,
    stop: frozenset[str] | None = None,
) -> TaxonomyForest:
    """Add a synonym phrase to a category's thesaurus, returning a new forest.

    The phrase goes through the keyword pipeline first; adding an already
    present synonym is a no-op (set semantics).
    """
    category = forest.get(code)
    synonym = make_synonym(phrase, stop)
    if synonym in category.thesaurus:
        return forest
    updated = replace(category, thesaurus=category.thesaurus | {synonym})
    categories = dict(forest.categories)
    categories[code] = updated
    return TaxonomyForest(categories)


def serialize_taxonomy(forest: TaxonomyForest) -> str:
    """Emit the taxonomy line format, deterministically ordered.

    Categories are sorted by code, synonyms lexicographically, so equal
    forests serialize to identical text and parse(serialize(f)) == f.
    """
    lines = []
    for code in sorted(forest.categories):
        cat = forest.categories[code]
        phrases = ";".join(sorted(syn.phrase for syn in cat.thesaurus))
        lines.append(f"{code}|{cat.parent or '-'}|{cat.label}|{phrases}")
    return "\n".join(lines) + ("\n" if lines else "")
