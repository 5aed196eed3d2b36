import random

import pytest

from pareto_kcenter.geom import Point, PointSet
from pareto_kcenter.instances import InstanceSpec, generate


def random_pointset(rng: random.Random, n: int, coord: int = 60,
                    integer: bool = True) -> PointSet:
    """Random instance; integer grids keep every comparison exact."""
    if integer:
        coords = [(rng.randint(0, coord), rng.randint(0, coord))
                  for _ in range(n)]
    else:
        coords = [(rng.uniform(0, coord), rng.uniform(0, coord))
                  for _ in range(n)]
    return PointSet.from_coords(coords)


def generated(kind: str, n: int, seed: int) -> PointSet:
    return generate(InstanceSpec(kind, n, seed))


def staircase(*coords) -> PointSet:
    return PointSet.from_coords(coords)


STAIR3 = [(0, 2), (1, 1), (2, 0)]
STAIR4 = [(0, 3), (1, 2), (2, 1), (3, 0)]
STAIR5 = [(0, 4), (1, 3), (2, 2), (3, 1), (4, 0)]


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def pytest_runtest_logreport(report):
    # One visible verdict line per acceptance criterion.
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        word = "PASS" if report.passed else "FAIL"
        name = report.nodeid.split("::")[-1]
        print(f"\nACCEPTANCE {word}: {name} [{report.duration:.1f}s]")
