"""JSON-over-HTTP API in front of the exchange hub.

Every route except session opening expects ``Authorization: Bearer <token>``.
Failures come back as ``{"error": code, "message": text}`` with a status
matching the error class.
"""

from __future__ import annotations

from contextlib import asynccontextmanager
from typing import Callable

from fastapi import FastAPI, Header, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import exchange, lom, scoring, taxonomy
from .exchange import ExchangeHub

__all__ = ["create_app", "ERROR_STATUS"]

ERROR_STATUS: dict[type[Exception], tuple[int, str]] = {
    exchange.AuthFailed: (401, "auth_failed"),
    exchange.UnreachableDomain: (401, "unreachable_domain"),
    exchange.InvalidToken: (401, "invalid_token"),
    exchange.ExpiredToken: (401, "expired_token"),
    exchange.UnknownItem: (404, "unknown_item"),
    exchange.UnknownStaging: (404, "unknown_staging"),
    exchange.MissingClassification: (409, "missing_classification"),
    taxonomy.UnknownCategory: (404, "unknown_category"),
    scoring.ZeroKeywords: (422, "zero_keywords"),
    lom.DuplicateFileName: (422, "duplicate_file_name"),
    lom.InvalidLom: (422, "invalid_lom"),
}


class SessionBody(BaseModel):
    domain: str
    username: str
    password: str


class StagingBody(BaseModel):
    item_ids: list[str]


class ClassificationBody(BaseModel):
    title: str = ""
    description: str = ""
    chosen: str | None = None


class SaveBody(BaseModel):
    lom: dict = {}


class ClassifyBody(BaseModel):
    title: str = ""
    description: str = ""


def _bearer(authorization: str | None) -> str:
    if not authorization or not authorization.startswith("Bearer "):
        raise exchange.InvalidToken("missing bearer token")
    return authorization.removeprefix("Bearer ")


def _suggestion_payload(score: scoring.CategoryScore) -> dict:
    return {
        "code": score.code,
        "label": score.label,
        "hin": score.hin,
        "rel_max": score.rel_max,
        "rel_tot": score.rel_tot,
        "matched_keywords": list(score.matched_keywords),
        "line": scoring.render_suggestion(score),
    }


def create_app(hub: ExchangeHub, on_startup: Callable[[], None] | None = None) -> FastAPI:
    @asynccontextmanager
    async def lifespan(_: FastAPI):
        if on_startup is not None:
            on_startup()
        yield

    app = FastAPI(title="llotax exchange service", lifespan=lifespan)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def _register(klass: type[Exception], status: int, code: str) -> None:
        async def handler(request: Request, exc: Exception):
            return JSONResponse(status_code=status, content={"error": code, "message": str(exc)})

        app.add_exception_handler(klass, handler)

    for klass, (status, code) in ERROR_STATUS.items():
        _register(klass, status, code)

    @app.post("/session")
    def open_session(body: SessionBody):
        session = hub.open_session(body.domain, body.username, body.password)
        return {"token": session.token, "expires_at": session.expires_at}

    @app.get("/items")
    def search_items(
        q: str = "",
        course: str | None = None,
        author: str | None = None,
        since: int | None = None,
        authorization: str | None = Header(default=None),
    ):
        items = hub.search_items(
            _bearer(authorization), q, course=course, author=author, modified_since=since
        )
        return [item.as_dict() for item in items]

    @app.post("/staging", status_code=201)
    def stage(body: StagingBody, authorization: str | None = Header(default=None)):
        staged = hub.stage_items(_bearer(authorization), body.item_ids)
        return {"staging_id": staged.staging_id, "folder": staged.folder}

    @app.post("/staging/{staging_id}/classification")
    def classify_staged(
        staging_id: str,
        body: ClassificationBody,
        authorization: str | None = Header(default=None),
    ):
        staged, suggestions = hub.attach_classification(
            _bearer(authorization), staging_id, body.title, body.description, body.chosen
        )
        entry = staged.classification[0]
        return {
            "classification": {
                "code": entry.code,
                "label": entry.label,
                "matched_keywords": list(entry.matched_keywords),
            },
            "suggestions": [_suggestion_payload(s) for s in suggestions],
        }

    @app.post("/staging/{staging_id}/save", status_code=201)
    def save(staging_id: str, body: SaveBody, authorization: str | None = Header(default=None)):
        llo_id = hub.save_llo(_bearer(authorization), staging_id, body.lom)
        return {"id": llo_id}

    @app.get("/items/{llo_id}/llo")
    def export_llo(llo_id: str, authorization: str | None = Header(default=None)):
        manifest, files = hub.export_llo(_bearer(authorization), llo_id)
        return {"manifest": manifest, "files": files}

    @app.post("/classify")
    def classify(body: ClassifyBody, authorization: str | None = Header(default=None)):
        lines = hub.classify(_bearer(authorization), body.title, body.description)
        return {"suggestions": lines, "selected": None}

    return app
