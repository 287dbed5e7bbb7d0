import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for the bruteforce helpers

from latticecops.copsets import (
    CopSetSpec,
    ExplicitFinite,
    even_rows_spec,
    halfplane_spec,
    theorem1_spec,
)

FIXTURES = Path(__file__).parent.parent / "fixtures"


@pytest.fixture
def theorem1():
    return theorem1_spec(2)


@pytest.fixture
def halfplane():
    return halfplane_spec()


@pytest.fixture
def sublattice():
    return even_rows_spec()


@pytest.fixture
def single_cop():
    return CopSetSpec(2, (ExplicitFinite(frozenset({(5, 5)})),))


@pytest.fixture
def fixtures_dir():
    return FIXTURES
