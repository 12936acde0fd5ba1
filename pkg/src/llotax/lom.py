"""Linkable learning object model: LOM metadata, classification, manifest.

A package bundles the LOM record (General / LifeCycle / Technical /
Educational / Rights sections), the taxonomy classification attached at
cataloging time, and the file inventory.  Manifests are plain UTF-8 text
in a fixed section layout, deterministic down to the byte so repeated
exports of the same package compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

__all__ = [
    "STRUCTURES",
    "STATUSES",
    "INTERACTIVITY_TYPES",
    "LEVELS",
    "END_USER_ROLES",
    "CONTEXTS",
    "COPYRIGHT_FLAGS",
    "General",
    "LifeCycle",
    "Technical",
    "Educational",
    "Rights",
    "LomRecord",
    "ClassificationEntry",
    "FileEntry",
    "LloPackage",
    "LomError",
    "InvalidLom",
    "DuplicateFileName",
    "ManifestParseError",
    "build_llo",
    "resolve_name",
    "serialize_manifest",
    "parse_manifest",
]

STRUCTURES = ("atomic", "collection", "networked", "hierarchical", "linear")
STATUSES = ("draft", "final", "revised", "unavailable")
INTERACTIVITY_TYPES = ("active", "expositive", "mixed")
LEVELS = ("very low", "low", "medium", "high", "very high")
END_USER_ROLES = ("teacher", "author", "learner", "manager")
CONTEXTS = ("school", "higher education", "training", "other")
COPYRIGHT_FLAGS = ("yes", "no")


class LomError(Exception):
    """Base class for learning-object failures."""


class InvalidLom(LomError):
    pass


class DuplicateFileName(LomError):
    pass


class ManifestParseError(LomError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


@dataclass(frozen=True)
class General:
    title: str
    description: str = ""
    authors: tuple[str, ...] = ()
    language: str = "en"
    keyword: str = ""
    structure: str = "atomic"


@dataclass(frozen=True)
class LifeCycle:
    status: str = "draft"


@dataclass(frozen=True)
class Technical:
    format: str = ""
    size: int = 0


@dataclass(frozen=True)
class Educational:
    interactivity_type: str = "expositive"
    learning_resource_type: str = "lecture"
    interactivity_level: str = "medium"
    semantic_density: str = "medium"
    intended_end_user_role: str = "learner"
    context: str = "higher education"
    language: str = "en"


@dataclass(frozen=True)
class Rights:
    copyright: str = "no"


@dataclass(frozen=True)
class LomRecord:
    general: General
    lifecycle: LifeCycle = LifeCycle()
    technical: Technical = Technical()
    educational: Educational = Educational()
    rights: Rights = Rights()


@dataclass(frozen=True)
class ClassificationEntry:
    code: str
    label: str
    matched_keywords: tuple[str, ...] = ()


@dataclass(frozen=True)
class FileEntry:
    name: str
    author: str = ""
    format: str = ""
    description: str = ""
    last_modified: int = 0
    size: int = 0


@dataclass(frozen=True)
class LloPackage:
    lom: LomRecord
    classification: tuple[ClassificationEntry, ...] = ()
    files: tuple[FileEntry, ...] = ()


def _check_text(where: str, value: str, forbidden: str = "") -> None:
    if "\n" in value or "\r" in value:
        raise InvalidLom(f"{where} must be a single line")
    if value != value.strip():
        raise InvalidLom(f"{where} has leading or trailing whitespace")
    for ch in forbidden:
        if ch in value:
            raise InvalidLom(f"{where} must not contain {ch!r}")


def _check_enum(where: str, value: str, allowed: tuple[str, ...]) -> None:
    if value not in allowed:
        raise InvalidLom(f"{where} must be one of {', '.join(allowed)}; got {value!r}")


def _check_language(where: str, value: str) -> None:
    if len(value) != 2 or not value.isalpha():
        raise InvalidLom(f"{where} must be a 2-letter code; got {value!r}")


def validate_lom(lom: LomRecord) -> None:
    """Raise InvalidLom on any field outside its vocabulary or shape."""
    g = lom.general
    if not g.title:
        raise InvalidLom("title must be non-empty")
    _check_text("title", g.title)
    _check_text("description", g.description)
    _check_text("keyword", g.keyword)
    for author in g.authors:
        _check_text("author", author, forbidden=";")
        if not author:
            raise InvalidLom("author names must be non-empty")
    _check_language("general language", g.language)
    _check_enum("structure", g.structure, STRUCTURES)
    _check_enum("status", lom.lifecycle.status, STATUSES)
    _check_text("format", lom.technical.format)
    if lom.technical.size < 0:
        raise InvalidLom("size must be non-negative")
    e = lom.educational
    _check_enum("interactivity type", e.interactivity_type, INTERACTIVITY_TYPES)
    _check_text("learning resource type", e.learning_resource_type)
    _check_enum("interactivity level", e.interactivity_level, LEVELS)
    _check_enum("semantic density", e.semantic_density, LEVELS)
    _check_enum("intended end user role", e.intended_end_user_role, END_USER_ROLES)
    _check_enum("context", e.context, CONTEXTS)
    _check_language("educational language", e.language)
    _check_enum("copyright", lom.rights.copyright, COPYRIGHT_FLAGS)


def validate_package(pkg: LloPackage) -> None:
    validate_lom(pkg.lom)
    seen = set()
    for entry in pkg.files:
        if not entry.name:
            raise InvalidLom("file name must be non-empty")
        if "/" in entry.name or "\\" in entry.name:
            raise InvalidLom(f"file name {entry.name!r} must not contain path separators")
        _check_text("file name", entry.name, forbidden="|")
        _check_text("file author", entry.author, forbidden="|")
        _check_text("file format", entry.format, forbidden="|")
        _check_text("file description", entry.description, forbidden="|")
        if entry.size < 0:
            raise InvalidLom("file size must be non-negative")
        if entry.name in seen:
            raise DuplicateFileName(entry.name)
        seen.add(entry.name)
    for entry in pkg.classification:
        _check_text("classification code", entry.code, forbidden="|")
        if not entry.code:
            raise InvalidLom("classification code must be non-empty")
        _check_text("classification label", entry.label, forbidden="|")
        for kw in entry.matched_keywords:
            _check_text("classification keyword", kw, forbidden="|,")
    if pkg.files and pkg.lom.technical.size != sum(f.size for f in pkg.files):
        raise InvalidLom("technical size must equal the sum of file sizes")


def build_llo(
    lom: LomRecord,
    files: tuple[FileEntry, ...] | list[FileEntry] = (),
    classification: tuple[ClassificationEntry, ...] | list[ClassificationEntry] = (),
) -> LloPackage:
    """Assemble and validate a package.

    When files are present the technical size is recomputed from them, so
    the stored LOM never disagrees with the inventory.
    """
    files = tuple(files)
    classification = tuple(classification)
    if files:
        total = sum(f.size for f in files)
        if lom.technical.size != total:
            lom = replace(lom, technical=replace(lom.technical, size=total))
    pkg = LloPackage(lom=lom, classification=classification, files=files)
    validate_package(pkg)
    return pkg


def resolve_name(original_name: str, folder: str | None = None) -> str:
    """Stored file name: unchanged for lone files, folder-prefixed otherwise."""
    if not original_name:
        raise InvalidLom("file name must be non-empty")
    if folder:
        return f"{folder}_{original_name}"
    return original_name


# Manifest layout: fixed section order, fixed key order inside each section.
_GENERAL_KEYS = ("Title", "Description", "Author(s)", "Language", "Keyword", "Structure")
_EDUCATIONAL_KEYS = (
    "Interactivity Type",
    "Learning Resource Type",
    "Interactivity Level",
    "Semantic Density",
    "Intended End User Role",
    "Context",
    "Language",
)


def serialize_manifest(pkg: LloPackage) -> str:
    """Render the package as manifest text; equal packages give equal bytes."""
    validate_package(pkg)
    g, e = pkg.lom.general, pkg.lom.educational
    out = [
        "[General]",
        f"Title: {g.title}",
        f"Description: {g.description}",
        f"Author(s): {'; '.join(g.authors)}",
        f"Language: {g.language}",
        f"Keyword: {g.keyword}",
        f"Structure: {g.structure}",
        "",
        "[LifeCycle]",
        f"Status: {pkg.lom.lifecycle.status}",
        "",
        "[Technical]",
        f"Format: {pkg.lom.technical.format}",
        f"Size: {pkg.lom.technical.size}",
        "",
        "[Educational]",
        f"Interactivity Type: {e.interactivity_type}",
        f"Learning Resource Type: {e.learning_resource_type}",
        f"Interactivity Level: {e.interactivity_level}",
        f"Semantic Density: {e.semantic_density}",
        f"Intended End User Role: {e.intended_end_user_role}",
        f"Context: {e.context}",
        f"Language: {e.language}",
        "",
        "[Rights]",
        f"Copyright: {pkg.lom.rights.copyright}",
    ]
    if pkg.classification:
        out.append("")
        out.append("[Classification]")
        for entry in pkg.classification:
            keywords = ",".join(entry.matched_keywords)
            out.append(f"Category: {entry.code}|{entry.label}|{keywords}")
    if pkg.files:
        out.append("")
        out.append("[Files]")
        for f in pkg.files:
            out.append(
                f"File: {f.name}|{f.author}|{f.format}|{f.size}|{f.last_modified}|{f.description}"
            )
    return "\n".join(out) + "\n"


def _parse_int(raw: str, line_no: int, what: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ManifestParseError(line_no, f"{what} must be an integer, got {raw!r}") from None


def parse_manifest(text: str) -> LloPackage:
    """Parse manifest text back into a package; unknown keys are rejected."""
    sections: dict[str, list[tuple[int, str, str]]] = {}
    current: str | None = None
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1]
            if current in sections:
                raise ManifestParseError(line_no, f"duplicate section [{current}]")
            sections[current] = []
            continue
        if current is None:
            raise ManifestParseError(line_no, "content before any section header")
        key, sep, value = line.partition(": ")
        if not sep:
            key, sep, value = line.partition(":")
            if not sep:
                raise ManifestParseError(line_no, "expected 'Key: value'")
        sections[current].append((line_no, key, value))

    known = {"General", "LifeCycle", "Technical", "Educational", "Rights", "Classification", "Files"}
    for name in sections:
        if name not in known:
            raise ManifestParseError(0, f"unknown section [{name}]")
    for required in ("General", "LifeCycle", "Technical", "Educational", "Rights"):
        if required not in sections:
            raise ManifestParseError(0, f"missing section [{required}]")

    def scalar_section(name: str, keys: tuple[str, ...]) -> dict[str, str]:
        values: dict[str, str] = {}
        for line_no, key, value in sections[name]:
            if key not in keys:
                raise ManifestParseError(line_no, f"unknown key {key!r} in [{name}]")
            if key in values:
                raise ManifestParseError(line_no, f"repeated key {key!r} in [{name}]")
            values[key] = value
        missing = [k for k in keys if k not in values]
        if missing:
            raise ManifestParseError(0, f"[{name}] missing keys: {', '.join(missing)}")
        return values

    general = scalar_section("General", _GENERAL_KEYS)
    lifecycle = scalar_section("LifeCycle", ("Status",))
    technical = scalar_section("Technical", ("Format", "Size"))
    educational = scalar_section("Educational", _EDUCATIONAL_KEYS)
    rights = scalar_section("Rights", ("Copyright",))

    authors = tuple(a for a in general["Author(s)"].split("; ") if a)
    lom = LomRecord(
        general=General(
            title=general["Title"],
            description=general["Description"],
            authors=authors,
            language=general["Language"],
            keyword=general["Keyword"],
            structure=general["Structure"],
        ),
        lifecycle=LifeCycle(status=lifecycle["Status"]),
        technical=Technical(
            format=technical["Format"],
            size=_parse_int(technical["Size"], 0, "Size"),
        ),
        educational=Educational(
            interactivity_type=educational["Interactivity Type"],
            learning_resource_type=educational["Learning Resource Type"],
            interactivity_level=educational["Interactivity Level"],
            semantic_density=educational["Semantic Density"],
            intended_end_user_role=educational["Intended End User Role"],
            context=educational["Context"],
            language=educational["Language"],
        ),
        rights=Rights(copyright=rights["Copyright"]),
    )

    classification = []
    for line_no, key, value in sections.get("Classification", []):
        if key != "Category":
            raise ManifestParseError(line_no, f"unknown key {key!r} in [Classification]")
        parts = value.split("|")
        if len(parts) != 3:
            raise ManifestParseError(line_no, "Category needs code|label|keywords")
        keywords = tuple(k for k in parts[2].split(",") if k)
        classification.append(ClassificationEntry(code=parts[0], label=parts[1], matched_keywords=keywords))

    files = []
    for line_no, key, value in sections.get("Files", []):
        if key != "File":
            raise ManifestParseError(line_no, f"unknown key {key!r} in [Files]")
        parts = value.split("|")
        if len(parts) != 6:
            raise ManifestParseError(line_no, "File needs name|author|format|size|modified|description")
        files.append(
            FileEntry(
                name=parts[0],
                author=parts[1],
                format=parts[2],
                size=_parse_int(parts[3], line_no, "file size"),
                last_modified=_parse_int(parts[4], line_no, "last modified"),
                description=parts[5],
            )
        )

    pkg = LloPackage(lom=lom, classification=tuple(classification), files=tuple(files))
    validate_package(pkg)
    return pkg
