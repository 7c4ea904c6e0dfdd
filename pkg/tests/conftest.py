import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pairsieve import build_prime_table


@pytest.fixture(scope="session")
def table_2k():
    return build_prime_table(2_000)


@pytest.fixture(scope="session")
def table_10k():
    return build_prime_table(10_002)


@pytest.fixture(scope="session")
def table_100k():
    return build_prime_table(100_002)


@pytest.fixture(scope="session")
def table_1m():
    return build_prime_table(1_000_002)
