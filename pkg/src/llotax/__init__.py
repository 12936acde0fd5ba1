"""llotax: taxonomy-assisted cataloging and linkable learning object exchange.

The package covers the whole workflow: extracting keywords from a title
and description, scoring them against a DDC-style category forest, packing
the result into a learning-object manifest, and moving objects between
simulated federated repositories over an HTTP API.
"""

from .exchange import ExchangeHub, Fixture, load_fixture, load_fixture_file
from .lom import (
    ClassificationEntry,
    FileEntry,
    LloPackage,
    LomRecord,
    build_llo,
    parse_manifest,
    resolve_name,
    serialize_manifest,
)
from .scoring import (
    CategoryScore,
    SynonymMatch,
    match_synonym,
    rank_categories,
    render_suggestions,
)
from .taxonomy import (
    Category,
    Synonym,
    TaxonomyForest,
    parse_taxonomy,
    serialize_taxonomy,
    upsert_synonym,
)
from .textpipe import KeywordSet, extract_keywords, load_stopwords

__all__ = [
    "ExchangeHub",
    "Fixture",
    "load_fixture",
    "load_fixture_file",
    "ClassificationEntry",
    "FileEntry",
    "LloPackage",
    "LomRecord",
    "build_llo",
    "parse_manifest",
    "resolve_name",
    "serialize_manifest",
    "CategoryScore",
    "SynonymMatch",
    "match_synonym",
    "rank_categories",
    "render_suggestions",
    "Category",
    "Synonym",
    "TaxonomyForest",
    "parse_taxonomy",
    "serialize_taxonomy",
    "upsert_synonym",
    "KeywordSet",
    "extract_keywords",
    "load_stopwords",
]

__version__ = "0.1.0"
