import numpy as np
import pytest

from grascat import fixtures
from grascat.cluster import grassmannian_initial_seed
from grascat.tableaux import Tableau, union_all


@pytest.fixture(scope="session")
def seed39():
    return grassmannian_initial_seed(3, 9)


@pytest.fixture(scope="session")
def seed48():
    return grassmannian_initial_seed(4, 8)


@pytest.fixture(scope="session")
def seed36():
    return grassmannian_initial_seed(3, 6)


@pytest.fixture(scope="session")
def alg39():
    return fixtures.tame_algebra("gr39")


@pytest.fixture(scope="session")
def alg48():
    return fixtures.tame_algebra("gr48")


def random_tableau(rng: np.random.Generator, k: int, n: int, max_cols: int = 4) -> Tableau:
    """Union of random strict columns; covers all of SSYT(k, [n])."""
    ncols = int(rng.integers(0, max_cols + 1))
    cols = [
        Tableau.from_column(sorted(rng.choice(np.arange(1, n + 1), size=k, replace=False)), n)
        for _ in range(ncols)
    ]
    return union_all(cols, k=k, n=n)
