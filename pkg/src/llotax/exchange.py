"""Federated repository workflow: session, search, stage, classify, save, export.

The hub simulates the two cooperating platforms in one process: a store of
course files on the "remote" side and a shelf of saved linkable objects on
the local side.  Sessions are bearer tokens with a TTL; downloads pass
through a temporary staging cache that is consumed by the save step.

The clock and the token generator are injectable so that a seeded hub
replays a scripted exchange byte-for-byte.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field, replace
from typing import Callable

from . import lom, scoring, textpipe
from .taxonomy import TaxonomyForest, UnknownCategory

__all__ = [
    "ExchangeError",
    "AuthFailed",
    "UnreachableDomain",
    "InvalidToken",
    "ExpiredToken",
    "UnknownItem",
    "UnknownStaging",
    "MissingClassification",
    "SessionToken",
    "RepoItem",
    "StagedItem",
    "Fixture",
    "load_fixture",
    "ExchangeHub",
]


class ExchangeError(Exception):
    """Base class for exchange failures."""


class AuthFailed(ExchangeError):
    pass


class UnreachableDomain(ExchangeError):
    pass


class InvalidToken(ExchangeError):
    pass


class ExpiredToken(ExchangeError):
    pass


class UnknownItem(ExchangeError):
    def __init__(self, item_id: str):
        super().__init__(f"unknown item: {item_id!r}")
        self.item_id = item_id


class UnknownStaging(ExchangeError):
    def __init__(self, staging_id: str):
        super().__init__(f"unknown or expired staging entry: {staging_id!r}")
        self.staging_id = staging_id


class MissingClassification(ExchangeError):
    pass


@dataclass(frozen=True)
class SessionToken:
    token: str
    user: str
    issued_at: float
    expires_at: float


@dataclass(frozen=True)
class RepoItem:
    id: str
    course: str
    filename: str
    author: str
    format: str
    description: str
    last_modified: int
    size: int
    payload_ref: str

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "course": self.course,
            "filename": self.filename,
            "author": self.author,
            "format": self.format,
            "description": self.description,
            "last_modified": self.last_modified,
            "size": self.size,
            "payload_ref": self.payload_ref,
        }


@dataclass(frozen=True)
class StagedItem:
    staging_id: str
    source_items: tuple[str, ...]
    folder: str | None
    classification: tuple[lom.ClassificationEntry, ...] = ()
    created_at: float = 0.0


@dataclass(frozen=True)
class Fixture:
    """Seed data for the simulator: accepted domains, users, course files."""

    domains: frozenset[str]
    users: dict[str, str]
    items: dict[str, RepoItem]
    payloads: dict[str, str] = field(default_factory=dict)


def load_fixture(source: str) -> Fixture:
    """Load a JSON fixture (domains, users, items with inline payloads)."""
    data = json.loads(source)
    items: dict[str, RepoItem] = {}
    payloads: dict[str, str] = {}
    for raw in data.get("items", []):
        ref = f"payload:{raw['id']}"
        items[raw["id"]] = RepoItem(
            id=raw["id"],
            course=raw.get("course", ""),
            filename=raw["filename"],
            author=raw.get("author", ""),
            format=raw.get("format", ""),
            description=raw.get("description", ""),
            last_modified=int(raw.get("last_modified", 0)),
            size=int(raw.get("size", 0)),
            payload_ref=ref,
        )
        payloads[ref] = raw.get("payload", "")
    return Fixture(
        domains=frozenset(data.get("domains", [])),
        users={u["username"]: u["password"] for u in data.get("users", [])},
        items=items,
        payloads=payloads,
    )


def load_fixture_file(path: str) -> Fixture:
    with open(path, encoding="utf-8") as handle:
        return load_fixture(handle.read())


@dataclass
class _SavedLlo:
    id: str
    package: lom.LloPackage
    payload_refs: tuple[dict, ...]


class ExchangeHub:
    """One in-process federation node handling the full exchange workflow.

    Mutating calls are applied in arrival order against plain dict state;
    readers always see a consistent snapshot because every public method
    runs to completion before the next mutation lands.
    """

    def __init__(
        self,
        forest: TaxonomyForest,
        fixture: Fixture,
        stopwords: frozenset[str] | None = None,
        *,
        token_ttl: float = 3600.0,
        staging_ttl: float = 1800.0,
        clock: Callable[[], float] = time.time,
        rng_seed: int | None = None,
        window: int = 1,
    ):
        self.forest = forest
        self.fixture = fixture
        self.stopwords = stopwords if stopwords is not None else textpipe.DEFAULT_STOPWORDS
        self.token_ttl = token_ttl
        self.staging_ttl = staging_ttl
        self.clock = clock
        self.window = window
        self._rng = random.Random(rng_seed)
        self._sessions: dict[str, SessionToken] = {}
        self._staging: dict[str, StagedItem] = {}
        self._saved: dict[str, _SavedLlo] = {}

    # -- session handling --------------------------------------------------

    def _new_id(self, prefix: str = "") -> str:
        value = f"{self._rng.getrandbits(128):032x}"
        return f"{prefix}{value}" if prefix else value

    def open_session(self, domain: str, username: str, password: str) -> SessionToken:
        """Authenticate against the remote platform and keep a session token."""
        if domain not in self.fixture.domains:
            raise UnreachableDomain(f"cannot reach {domain!r}")
        if self.fixture.users.get(username) != password:
            raise AuthFailed("bad username or password")
        now = self.clock()
        token = SessionToken(
            token=self._new_id(),
            user=username,
            issued_at=now,
            expires_at=now + self.token_ttl,
        )
        self._sessions[token.token] = token
        return token

    def _require_session(self, token: str) -> SessionToken:
        session = self._sessions.get(token)
        if session is None:
            raise InvalidToken("no such session token")
        if self.clock() >= session.expires_at:
            del self._sessions[token]
            raise ExpiredToken("session token has expired")
        return session

    # -- search and staging ------------------------------------------------

    def search_items(
        self,
        token: str,
        query: str = "",
        course: str | None = None,
        author: str | None = None,
        modified_since: int | None = None,
    ) -> list[RepoItem]:
        """Substring search over file names, refined by the advanced filters."""
        self._require_session(token)
        needle = query.lower()
        results = []
        for item in self.fixture.items.values():
            if needle and needle not in item.filename.lower():
                continue
            if course is not None and course.lower() not in item.course.lower():
                continue
            if author is not None and author.lower() not in item.author.lower():
                continue
            if modified_since is not None and item.last_modified < modified_since:
                continue
            results.append(item)
        results.sort(key=lambda it: (it.course, it.filename))
        return results

    def _purge_expired_staging(self) -> None:
        now = self.clock()
        expired = [sid for sid, st in self._staging.items() if now >= st.created_at + self.staging_ttl]
        for sid in expired:
            del self._staging[sid]

    def stage_items(self, token: str, item_ids: list[str]) -> StagedItem:
        """Copy selected items into the temporary cache pending metadata."""
        self._require_session(token)
        self._purge_expired_staging()
        if not item_ids:
            raise UnknownItem("<empty selection>")
        for item_id in item_ids:
            if item_id not in self.fixture.items:
                raise UnknownItem(item_id)
        courses = {self.fixture.items[i].course for i in item_ids}
        folder = courses.pop() if len(item_ids) > 1 and len(courses) == 1 else None
        staged = StagedItem(
            staging_id=self._new_id("stg-"),
            source_items=tuple(item_ids),
            folder=folder,
            created_at=self.clock(),
        )
        self._staging[staged.staging_id] = staged
        return staged

    def _require_staging(self, staging_id: str) -> StagedItem:
        self._purge_expired_staging()
        staged = self._staging.get(staging_id)
        if staged is None:
            raise UnknownStaging(staging_id)
        return staged

    # -- classification and save --------------------------------------------

    def attach_classification(
        self,
        token: str,
        staging_id: str,
        title: str,
        description: str,
        chosen: str | None = None,
    ) -> tuple[StagedItem, list[scoring.CategoryScore]]:
        """Classify the staged content, honoring an explicit category choice.

        Without a choice the top suggestion is recorded automatically.
        """
        self._require_session(token)
        staged = self._require_staging(staging_id)
        keywords = textpipe.extract_keywords(title, description, self.stopwords)
        suggestions = scoring.rank_categories(self.forest, keywords, self.window)
        if chosen is not None:
            category = self.forest.get(chosen)  # raises UnknownCategory
            picked = next((s for s in suggestions if s.code == chosen), None)
            entry = lom.ClassificationEntry(
                code=category.code,
                label=category.label,
                matched_keywords=picked.matched_keywords if picked else (),
            )
        else:
            if not suggestions:
                raise scoring.ZeroKeywords("no category matches the text")
            top = suggestions[0]
            entry = lom.ClassificationEntry(
                code=top.code,
                label=top.label,
                matched_keywords=top.matched_keywords,
            )
        staged = replace(staged, classification=(entry,))
        self._staging[staging_id] = staged
        return staged, suggestions

    def save_llo(self, token: str, staging_id: str, lom_overrides: dict | None = None) -> str:
        """Turn a staged entry into a stored linkable object; consumes the entry."""
        self._require_session(token)
        staged = self._require_staging(staging_id)
        if not staged.classification:
            raise MissingClassification("attach a classification before saving")
        items = [self.fixture.items[i] for i in staged.source_items]
        files = tuple(
            lom.FileEntry(
                name=lom.resolve_name(item.filename, staged.folder),
                author=item.author,
                format=item.format,
                description=item.description,
                last_modified=item.last_modified,
                size=item.size,
            )
            for item in items
        )
        record = self._default_lom(staged, items)
        record = _apply_overrides(record, lom_overrides or {})
        package = lom.build_llo(record, files=files, classification=staged.classification)
        llo_id = self._new_id("llo-")
        refs = tuple(
            {"name": f.name, "payload_ref": item.payload_ref, "size": item.size}
            for f, item in zip(files, items)
        )
        self._saved[llo_id] = _SavedLlo(id=llo_id, package=package, payload_refs=refs)
        del self._staging[staging_id]
        return llo_id

    def _default_lom(self, staged: StagedItem, items: list[RepoItem]) -> lom.LomRecord:
        authors = tuple(dict.fromkeys(item.author for item in items if item.author))
        formats = {item.format for item in items}
        return lom.LomRecord(
            general=lom.General(
                title=staged.folder or items[0].filename,
                description=items[0].description,
                authors=authors,
                structure="collection" if len(items) > 1 else "atomic",
            ),
            technical=lom.Technical(
                format=formats.pop() if len(formats) == 1 else "mixed",
                size=sum(item.size for item in items),
            ),
        )

    # -- export and live classification --------------------------------------

    def export_llo(self, token: str, llo_id: str) -> tuple[str, list[dict]]:
        """Manifest text plus payload references for a saved object."""
        self._require_session(token)
        saved = self._saved.get(llo_id)
        if saved is None:
            raise UnknownItem(llo_id)
        return lom.serialize_manifest(saved.package), list(saved.payload_refs)

    def get_payload(self, payload_ref: str) -> str:
        if payload_ref not in self.fixture.payloads:
            raise UnknownItem(payload_ref)
        return self.fixture.payloads[payload_ref]

    def classify(self, token: str, title: str, description: str) -> list[str]:
        """Rendered suggestion lines for live display while cataloging."""
        self._require_session(token)
        keywords = textpipe.extract_keywords(title, description, self.stopwords)
        scores = scoring.rank_categories(self.forest, keywords, self.window)
        return scoring.render_suggestions(scores)


def _apply_overrides(record: lom.LomRecord, overrides: dict) -> lom.LomRecord:
    """Merge a nested {section: {field: value}} dict into a LOM record."""
    sections = {
        "general": record.general,
        "lifecycle": record.lifecycle,
        "technical": record.technical,
        "educational": record.educational,
        "rights": record.rights,
    }
    for section_name, fields in overrides.items():
        if section_name not in sections:
            raise lom.InvalidLom(f"unknown LOM section {section_name!r}")
        if not isinstance(fields, dict):
            raise lom.InvalidLom(f"section {section_name!r} must map fields to values")
        section = sections[section_name]
        for field_name, value in fields.items():
            if not hasattr(section, field_name):
                raise lom.InvalidLom(f"unknown field {section_name}.{field_name}")
            if field_name == "authors":
                value = tuple(value)
            section = replace(section, **{field_name: value})
        sections[section_name] = section
    return lom.LomRecord(
        general=sections["general"],
        lifecycle=sections["lifecycle"],
        technical=sections["technical"],
        educational=sections["educational"],
        rights=sections["rights"],
    )
