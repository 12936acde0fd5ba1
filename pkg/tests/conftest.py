"""Shared fixtures: the sample document, the sample taxonomy, a fake clock."""

import pytest

from llotax import cli, exchange, taxonomy, textpipe

# Title and description of the worked cataloging example (a chemistry
# paper abstract) used across the scoring and exchange tests.
SAMPLE_TITLE = (
    "Coupling Quantum Interpretative Techniques: Another Look at Chemical "
    "Mechanisms in Organic Reactions"
)
SAMPLE_DESCRIPTION = (
    "A cross ELF/NCI analysis is tested over prototypical organic reactions. "
    "The synergetic use of ELF and NCI enables the understanding of reaction "
    "mechanisms since each method can respectively identify regions of strong "
    "and weak electron pairing. Chemically intuitive results are recovered and "
    "enriched by the identification of new features. Noncovalent interactions "
    "are found to foresee the evolution of the reaction from the initial steps. "
    "Within NCI, no topological catastrophe is observed as changes are "
    "continuous to such an extent that future reaction steps can be predicted "
    "from the evolution of the initial NCI critical points. Indeed, strong "
    "convergences through the reaction paths between ELF and NCI critical "
    "points enable identification of key interactions at the origin of the "
    "bond formation. VMD scripts enabling the automatic generation of movies "
    "depicting the cross NCI/ELF analysis along a reaction path (or following "
    "a Born-Oppenheimer molecular dynamics trajectory) are provided as "
    "Supporting Information."
)


class FakeClock:
    """Deterministic clock; tests advance it explicitly."""

    def __init__(self, start: float = 1_600_000_000.0):
        self.now = start

    def __call__(self) -> float:
        return self.now

    def advance(self, seconds: float) -> None:
        self.now += seconds


@pytest.fixture(scope="session")
def sample_forest() -> taxonomy.TaxonomyForest:
    return taxonomy.load_taxonomy_file(cli.sample_taxonomy_path())


@pytest.fixture(scope="session")
def sample_keywords() -> textpipe.KeywordSet:
    return textpipe.extract_keywords(SAMPLE_TITLE, SAMPLE_DESCRIPTION)


@pytest.fixture(scope="session")
def sample_fixture() -> exchange.Fixture:
    return exchange.load_fixture_file(cli.sample_fixture_path())


@pytest.fixture
def clock() -> FakeClock:
    return FakeClock()


@pytest.fixture
def hub(sample_forest, sample_fixture, clock) -> exchange.ExchangeHub:
    return exchange.ExchangeHub(
        sample_forest,
        sample_fixture,
        token_ttl=3600.0,
        staging_ttl=1800.0,
        clock=clock,
        rng_seed=1234,
    )
