"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import random
import re
import time

from fastapi.testclient import TestClient

from llotax import exchange, lom, scoring, service
from llotax.scoring import (
    SynonymMatch,
    rank_categories,
    relative_inherence,
    render_suggestions,
    synonym_inherence,
    synonym_power_kernel,
)
from llotax.taxonomy import Category, Synonym, TaxonomyForest, path_to_root
from llotax.textpipe import extract_keywords

from conftest import SAMPLE_DESCRIPTION, SAMPLE_TITLE, FakeClock


def report(number: int, ok: bool, detail: str) -> None:
    print(f"\nacceptance criterion {number}: {'PASS' if ok else 'FAIL'} — {detail}", flush=True)
    assert ok, f"criterion {number}: {detail}"


def synthetic(occurrences: int, word_count: int) -> SynonymMatch:
    return SynonymMatch(
        synonym=Synonym(tuple(f"w{i}" for i in range(word_count))),
        word_count=word_count,
        occurrences=occurrences,
        covered=min(occurrences, word_count),
    )


def test_criterion_1_partial_coverage_monotonicity():
    """H_s strictly decreases in synonym size for a fixed hit count."""
    started = time.perf_counter()
    ok = abs(synonym_inherence(synthetic(1, 3)) - 1 / 3) < 1e-12
    ok &= abs(synonym_inherence(synthetic(1, 4)) - 1 / 4) < 1e-12
    ok &= synonym_inherence(synthetic(1, 3)) > synonym_inherence(synthetic(1, 4))
    for occurrences in range(1, 11):
        values = [synonym_inherence(synthetic(occurrences, s)) for s in range(1, 11)]
        ok &= all(a > b for a, b in zip(values, values[1:]))
    elapsed = time.perf_counter() - started
    report(1, ok and elapsed < 1.0, f"strict decrease in synonym size, R,S in 1..10 ({elapsed:.3f}s)")


def test_criterion_2_kernel_flat_at_single_hit():
    """The unscaled power kernel cannot tell synonym sizes apart at one hit."""
    ok = all(synonym_power_kernel(synthetic(1, s)) == 1.0 for s in range(1, 11))
    report(2, ok, "power kernel is exactly 1 at R=1 for every S in 1..10")


def test_criterion_3_complete_coverage_scores_size():
    """Full coverage of an n-word synonym scores exactly n."""
    ok = all(synonym_inherence(synthetic(s, s)) == float(s) for s in range(1, 11))
    report(3, ok, "H_s == S exactly at R=S for S in 1..10")


def brute_force_relative(matches, total_keywords: int) -> float:
    acc = 0.0
    for m in matches:
        if m.occurrences > 0:
            acc += (m.occurrences ** (m.occurrences / m.word_count)) * m.occurrences**2 / m.word_count
    return acc / total_keywords


def test_criterion_4_oracle_equivalence():
    """Implementation matches independently coded brute-force arithmetic.

    Power terms reach ~1e15 (twelve hits on a one-word synonym), so the
    1e-9 agreement bound is applied relatively, with the same bound used
    absolutely for exact-zero cases.
    """
    started = time.perf_counter()
    rng = random.Random(20260810)
    ok = True
    for _ in range(1000):
        total = rng.randint(1, 200)
        matches = [
            synthetic(rng.randint(0, 12), rng.randint(1, 5))
            for _ in range(rng.randint(1, 8))
        ]
        got = relative_inherence(matches, total)
        expected = brute_force_relative(matches, total)
        ok &= abs(got - expected) <= max(1e-9, 1e-9 * abs(expected))

    for _ in range(200):
        depth = rng.randint(1, 6)
        codes = [f"n{i}" for i in range(depth)]
        forest = TaxonomyForest(
            {
                code: Category(code, code.upper(), parent=codes[i - 1] if i else None)
                for i, code in enumerate(codes)
            }
        )
        rel = {code: rng.uniform(0, 50) for code in codes}
        expected = sum(
            level * rel[code]
            for level, code in enumerate(path_to_root(forest, codes[-1]), start=1)
        )
        got = scoring.absolute_inherence(forest, codes[-1], rel)
        ok &= abs(got - expected) <= max(1e-9, 1e-9 * abs(expected))
    elapsed = time.perf_counter() - started
    report(4, ok and elapsed < 5.0, f"1000 random categories + 200 random paths vs oracles ({elapsed:.3f}s)")


LINE_GRAMMAR = re.compile(
    r"^\S+ - .+ \(keywords:( '[^']+')+\) "
    r"\(Hin Value: \d+(\.\d)?\) "
    r"Relevance: \(max:\d+(\.\d)?% \| \(Tot:\d+(\.\d)?%\)$"
)


def test_criterion_5_desk_scale_reproduction(sample_forest):
    """The 21-category worked example: ranking, normalization, line grammar.

    The stated expectation that 541.2 ranks first does not hold under the
    pinned scoring formulas: in this text 'reaction' occurs 7 times (shared
    by four categories), and the residual terms decide the order — 541.36
    gains 2^2*2*2=16 from the twice-occurring 'point' plus 1 from
    'formation', while 541.2 gains only 4 from fully covered
    'molecular bond' plus 1 from 'quantum'; 547.2 likewise gains 16 at the
    root from the twice-occurring 'organic'.  So 541.36 > 547.2 > 541.2.
    The test asserts the requirement as written and is expected to fail on
    that clause; the structural clauses all hold.
    """
    started = time.perf_counter()
    keywords = extract_keywords(SAMPLE_TITLE, SAMPLE_DESCRIPTION)
    scores = rank_categories(sample_forest, keywords)
    lines = render_suggestions(scores)
    elapsed = time.perf_counter() - started

    structural_ok = (
        bool(scores)
        and scores[0].hin == 100.0
        and all(s.hin < 100.0 for s in scores[1:])
        and all(s.rel_max <= s.rel_tot + 1e-15 for s in scores)
        and all(LINE_GRAMMAR.match(line) for line in lines)
        and elapsed < 1.0
    )
    ranking_ok = scores[0].code == "541.2" and all(
        s.hin < 100.0 for s in scores if s.code != "541.2"
    )
    detail = (
        f"top={scores[0].code} hin={scores[0].hin:.6f}, structural clauses "
        f"{'hold' if structural_ok else 'broken'} ({elapsed:.3f}s)"
    )
    report(5, structural_ok and ranking_ok, detail)


def test_criterion_6_relevance_percent_strings():
    """One-decimal percent rendering matches the worked example arithmetic."""
    kw69 = extract_keywords("", " ".join(["reaction"] * 2 + ["filler"] * 67), frozenset())
    assert kw69.total == 69
    forest = TaxonomyForest(
        {
            "1": Category("1", "Twice", thesaurus=frozenset({Synonym(("reaction",))})),
            "2": Category("2", "Once", thesaurus=frozenset({Synonym(("quantum",))})),
        }
    )
    kw_single = extract_keywords("", " ".join(["quantum"] + ["filler"] * 68), frozenset())
    line_two = render_suggestions(rank_categories(forest, kw69))[0]
    line_one = render_suggestions(rank_categories(forest, kw_single))[0]
    ok = "(max:2.9% | (Tot:2.9%)" in line_two and "(max:1.4% | (Tot:1.4%)" in line_one
    report(6, ok, "count 2 of 69 renders 2.9%, count 1 renders 1.4%")


def reference_package() -> lom.LloPackage:
    return lom.build_llo(
        lom.LomRecord(
            general=lom.General(
                title="Moodledata Upload",
                description="Slide delle lezioni disponibili per il download",
                authors=("Sergio TASSO",),
                language="en",
                keyword="test",
                structure="atomic",
            ),
            lifecycle=lom.LifeCycle(status="draft"),
            technical=lom.Technical(format="pdf", size=2034664),
            educational=lom.Educational(
                interactivity_type="active",
                learning_resource_type="exercise",
                interactivity_level="very low",
                semantic_density="very low",
                intended_end_user_role="teacher",
                context="school",
                language="en",
            ),
            rights=lom.Rights(copyright="no"),
        )
    )


def random_package(rng: random.Random) -> lom.LloPackage:
    def text(size: int = 12) -> str:
        alphabet = "abcdefghijklmnopqrstuvwxyz AEIOU.()'-:0123456789"
        return "".join(rng.choice(alphabet) for _ in range(rng.randint(0, size))).strip()

    def name() -> str:
        return "".join(rng.choice("abcdefghijk_.-0123456789") for _ in range(rng.randint(1, 12)))

    names = list({name() for _ in range(rng.randint(0, 4))})
    files = tuple(
        lom.FileEntry(
            name=n,
            author=text(),
            format=rng.choice(("pdf", "txt", "zip", "")),
            description=text(20),
            last_modified=rng.randint(0, 2**31),
            size=rng.randint(0, 10**8),
        )
        for n in names
    )
    classification = tuple(
        lom.ClassificationEntry(
            code=f"{rng.randint(500, 549)}.{rng.randint(0, 99)}",
            label=text(10) or "x",
            matched_keywords=tuple(filter(None, (text(8).replace(":", "") for _ in range(rng.randint(0, 3))))),
        )
        for _ in range(rng.randint(0, 2))
    )
    record = lom.LomRecord(
        general=lom.General(
            title=text(16) or "untitled",
            description=text(30),
            authors=tuple(filter(None, (text(10).replace(";", "") for _ in range(rng.randint(0, 3))))),
            language=rng.choice(("en", "it", "de")),
            keyword=text(),
            structure=rng.choice(lom.STRUCTURES),
        ),
        lifecycle=lom.LifeCycle(status=rng.choice(lom.STATUSES)),
        technical=lom.Technical(format=rng.choice(("pdf", "txt", "")), size=rng.randint(0, 10**9)),
        educational=lom.Educational(
            interactivity_type=rng.choice(lom.INTERACTIVITY_TYPES),
            learning_resource_type=text(10),
            interactivity_level=rng.choice(lom.LEVELS),
            semantic_density=rng.choice(lom.LEVELS),
            intended_end_user_role=rng.choice(lom.END_USER_ROLES),
            context=rng.choice(lom.CONTEXTS),
            language=rng.choice(("en", "it", "de")),
        ),
        rights=lom.Rights(copyright=rng.choice(lom.COPYRIGHT_FLAGS)),
    )
    return lom.build_llo(record, files=files, classification=classification)


def test_criterion_7_manifest_fidelity():
    """Exact reference key/values plus parse-serialize identity, 500 packages."""
    manifest = lom.serialize_manifest(reference_package())
    pairs = (
        "Title: Moodledata Upload",
        "Status: draft",
        "Format: pdf",
        "Size: 2034664",
        "Structure: atomic",
        "Copyright: no",
    )
    ok = all(f"\n{pair}\n" in manifest or manifest.startswith(f"{pair}\n") for pair in pairs)
    rng = random.Random(7)
    for _ in range(500):
        pkg = random_package(rng)
        ok &= lom.parse_manifest(lom.serialize_manifest(pkg)) == pkg
    report(7, ok, "reference key/values present; 500-package roundtrip identity")


def run_exchange_script(sample_forest, sample_fixture) -> list[bytes]:
    clock = FakeClock()
    hub = exchange.ExchangeHub(
        sample_forest, sample_fixture, clock=clock, rng_seed=99,
        token_ttl=3600.0, staging_ttl=1800.0,
    )
    client = TestClient(service.create_app(hub))
    transcript: list[bytes] = []

    def step(response, expected_status):
        assert response.status_code == expected_status, response.text
        transcript.append(response.content)
        return response.json()

    session = step(
        client.post("/session", json={"domain": "moodle.example.edu", "username": "admin", "password": "admin123"}),
        200,
    )
    auth = {"Authorization": f"Bearer {session['token']}"}
    items = step(client.get("/items", params={"q": "slide"}, headers=auth), 200)
    staged = step(
        client.post("/staging", json={"item_ids": [item["id"] for item in items]}, headers=auth),
        201,
    )
    step(
        client.post(
            f"/staging/{staged['staging_id']}/classification",
            json={"title": SAMPLE_TITLE, "description": SAMPLE_DESCRIPTION},
            headers=auth,
        ),
        200,
    )
    saved = step(
        client.post(
            f"/staging/{staged['staging_id']}/save",
            json={"lom": {"general": {"title": "Chemistry Slides"}}},
            headers=auth,
        ),
        201,
    )
    exported = step(client.get(f"/items/{saved['id']}/llo", headers=auth), 200)

    # consumed staging id must now be gone
    reuse = client.post(f"/staging/{staged['staging_id']}/save", json={"lom": {}}, headers=auth)
    assert reuse.status_code == 404 and reuse.json()["error"] == "unknown_staging"
    transcript.append(reuse.content)

    # expired token must be rejected with the dedicated error
    clock.advance(3601)
    expired = client.get("/items", headers=auth)
    assert expired.status_code == 401 and expired.json()["error"] == "expired_token"
    transcript.append(expired.content)

    assert "File: Chem101_Slides_Lecture1.pdf|" in exported["manifest"]
    assert "File: Chem101_Slides_Lecture2.pdf|" in exported["manifest"]
    return transcript


def test_criterion_8_exchange_end_to_end(sample_forest, sample_fixture):
    """Scripted flow over the HTTP API, folder naming, replay determinism."""
    started = time.perf_counter()
    first = run_exchange_script(sample_forest, sample_fixture)
    second = run_exchange_script(sample_forest, sample_fixture)
    elapsed = time.perf_counter() - started
    ok = first == second and elapsed < 2.0
    report(8, ok, f"search→stage→classify→save→export, byte-identical replay ({elapsed:.3f}s)")


def test_criterion_9_keyword_order_invariance(sample_forest):
    """Ranking ignores word order in the description."""
    rng = random.Random(13)
    words = SAMPLE_DESCRIPTION.split()
    baseline = rank_categories(sample_forest, extract_keywords(SAMPLE_TITLE, SAMPLE_DESCRIPTION))
    ok = True
    for _ in range(50):
        rng.shuffle(words)
        shuffled = rank_categories(
            sample_forest, extract_keywords(SAMPLE_TITLE, " ".join(words))
        )
        ok &= shuffled == baseline
    report(9, ok, "identical ranking under 50 random permutations of the description")
