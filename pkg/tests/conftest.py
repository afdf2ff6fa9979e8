import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from samscore import PosTag, SentimentLexicon, bundled_lexicon

# oracle helpers live next to the tests
sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "samscore", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("samscore")

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def lexicon():
    return bundled_lexicon()


@pytest.fixture(scope="session")
def toy_lexicon():
    # five entries, mixed polarity, one exact zero
    return SentimentLexicon(
        [
            (("alpha", PosTag.NOUN), 0.9),
            (("beta", PosTag.NOUN), -0.7),
            (("gamma", PosTag.ADJECTIVE), 0.3),
            (("delta", PosTag.VERB), -0.2),
            (("omega", PosTag.NOUN), 0.0),
        ],
        source_name="toy",
    )


@pytest.fixture
def fixtures_dir():
    return FIXTURES
