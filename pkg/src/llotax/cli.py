"""Command-line entry points: classify, package, serve.

Exit codes: 0 success, 1 input or configuration problem, 2 classification
with no usable keywords.
"""

from __future__ import annotations

import signal
import sys
from importlib import resources

import click

from . import exchange, lom, scoring, service, taxonomy, textpipe

EXIT_INPUT_ERROR = 1
EXIT_ZERO_KEYWORDS = 2


def _fail(message: str, code: int = EXIT_INPUT_ERROR) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_inputs(taxonomy_path: str, stopwords_path: str | None):
    try:
        stop = (
            textpipe.load_stopwords_file(stopwords_path)
            if stopwords_path
            else textpipe.DEFAULT_STOPWORDS
        )
    except OSError as exc:
        _fail(f"cannot read stopword file: {exc}")
    try:
        forest = taxonomy.load_taxonomy_file(taxonomy_path, stop)
    except OSError as exc:
        _fail(f"cannot read taxonomy file: {exc}")
    except taxonomy.TaxonomyError as exc:
        _fail(f"taxonomy: {exc}")
    return forest, stop


def sample_taxonomy_path() -> str:
    return str(resources.files("llotax.data").joinpath("sample_taxonomy.txt"))


def sample_fixture_path() -> str:
    return str(resources.files("llotax.data").joinpath("sample_fixture.json"))


@click.group()
def main() -> None:
    """Taxonomy-assisted cataloging and linkable object exchange."""


@main.command("classify")
@click.option("--taxonomy", "taxonomy_path", default=None, help="Taxonomy file (defaults to the shipped sample).")
@click.option("--stopwords", "stopwords_path", default=None, help="Stopword file (defaults to the shipped list).")
@click.option("--title", default="", help="Object title.")
@click.option("--description", default="", help="Object description.")
@click.option("--top", type=int, default=None, help="Print only the first N suggestions.")
@click.option("--window", type=int, default=1, help="Phrase window length for synonym matching.")
def cmd_classify(taxonomy_path, stopwords_path, title, description, top, window):
    """Print ranked category suggestions for a title/description pair."""
    forest, stop = _load_inputs(taxonomy_path or sample_taxonomy_path(), stopwords_path)
    keywords = textpipe.extract_keywords(title, description, stop)
    try:
        scores = scoring.rank_categories(forest, keywords, window)
    except scoring.ZeroKeywords:
        _fail("no valid keywords in title/description", EXIT_ZERO_KEYWORDS)
    lines = scoring.render_suggestions(scores)
    if top is not None:
        lines = lines[:top]
    for line in lines:
        click.echo(line)


@main.command("package")
@click.option("--manifest-out", required=True, type=click.Path(dir_okay=False, writable=True))
@click.option("--title", required=True)
@click.option("--description", default="")
@click.option("--author", "authors", multiple=True)
@click.option("--language", default="en")
@click.option("--keyword", default="")
@click.option("--structure", default="atomic")
@click.option("--status", default="draft")
@click.option("--fmt", "--format", "format_", default="")
@click.option("--size", type=int, default=0)
@click.option("--interactivity-type", default="expositive")
@click.option("--learning-resource-type", default="lecture")
@click.option("--interactivity-level", default="medium")
@click.option("--semantic-density", default="medium")
@click.option("--end-user-role", default="learner")
@click.option("--context", default="higher education")
@click.option("--educational-language", default="en")
@click.option("--copyright", "copyright_", default="no")
@click.option("--file", "file_specs", multiple=True, metavar="NAME:AUTHOR:FORMAT:SIZE:EPOCH:DESC")
@click.option("--category", "category_code", default=None, help="Taxonomy code to attach.")
@click.option("--taxonomy", "taxonomy_path", default=None, help="Taxonomy file for category labels.")
def cmd_package(
    manifest_out,
    title,
    description,
    authors,
    language,
    keyword,
    structure,
    status,
    format_,
    size,
    interactivity_type,
    learning_resource_type,
    interactivity_level,
    semantic_density,
    end_user_role,
    context,
    educational_language,
    copyright_,
    file_specs,
    category_code,
    taxonomy_path,
):
    """Build a linkable object manifest from LOM fields and file entries."""
    files = []
    for spec_text in file_specs:
        parts = spec_text.split(":", 5)
        if len(parts) != 6:
            _fail(f"--file needs NAME:AUTHOR:FORMAT:SIZE:EPOCH:DESC, got {spec_text!r}")
        try:
            entry = lom.FileEntry(
                name=parts[0],
                author=parts[1],
                format=parts[2],
                size=int(parts[3]),
                last_modified=int(parts[4]),
                description=parts[5],
            )
        except ValueError as exc:
            _fail(f"--file {spec_text!r}: {exc}")
        files.append(entry)

    classification = []
    if category_code:
        forest, _ = _load_inputs(taxonomy_path or sample_taxonomy_path(), None)
        try:
            category = forest.get(category_code)
        except taxonomy.UnknownCategory as exc:
            _fail(str(exc))
        classification.append(lom.ClassificationEntry(code=category.code, label=category.label))

    record = lom.LomRecord(
        general=lom.General(
            title=title,
            description=description,
            authors=tuple(authors),
            language=language,
            keyword=keyword,
            structure=structure,
        ),
        lifecycle=lom.LifeCycle(status=status),
        technical=lom.Technical(format=format_, size=size),
        educational=lom.Educational(
            interactivity_type=interactivity_type,
            learning_resource_type=learning_resource_type,
            interactivity_level=interactivity_level,
            semantic_density=semantic_density,
            intended_end_user_role=end_user_role,
            context=context,
            language=educational_language,
        ),
        rights=lom.Rights(copyright=copyright_),
    )
    try:
        package = lom.build_llo(record, files=files, classification=classification)
        manifest = lom.serialize_manifest(package)
    except lom.LomError as exc:
        _fail(str(exc))
    with open(manifest_out, "w", encoding="utf-8") as handle:
        handle.write(manifest)
    click.echo(f"wrote {manifest_out}")


@main.command("serve")
@click.option("--port", type=int, default=8080)
@click.option("--host", default="127.0.0.1")
@click.option("--taxonomy", "taxonomy_path", default=None)
@click.option("--stopwords", "stopwords_path", default=None)
@click.option("--fixture", "fixture_path", default=None)
@click.option("--token-ttl", type=float, default=3600.0)
@click.option("--staging-ttl", type=float, default=1800.0)
@click.option("--rng-seed", type=int, default=None, help="Seed token generation (tests only).")
def cmd_serve(taxonomy_path, stopwords_path, fixture_path, port, host, token_ttl, staging_ttl, rng_seed):
    """Run the exchange HTTP service until interrupted."""
    import uvicorn

    forest, stop = _load_inputs(taxonomy_path or sample_taxonomy_path(), stopwords_path)
    try:
        fixture = exchange.load_fixture_file(fixture_path or sample_fixture_path())
    except (OSError, ValueError, KeyError) as exc:
        _fail(f"cannot load fixture: {exc}")
    hub = exchange.ExchangeHub(
        forest,
        fixture,
        stop,
        token_ttl=token_ttl,
        staging_ttl=staging_ttl,
        rng_seed=rng_seed,
    )
    def announce() -> None:
        print(f"llotax exchange service listening on http://{host}:{port}", flush=True)

    app = service.create_app(hub, on_startup=announce)
    # uvicorn re-raises a captured SIGTERM after its graceful shutdown;
    # turn that into a clean zero exit for supervisors and scripts
    signal.signal(signal.SIGTERM, lambda signum, frame: sys.exit(0))
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
