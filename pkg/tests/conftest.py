from __future__ import annotations

from functools import lru_cache

import pytest
from hypothesis import settings, strategies as st

from f2invol import _batch
from f2invol.gf2 import BitMatrix
from f2invol.isometries import _trusted_involution, group_array, involution_mask
from f2invol.spaces import SpaceType, standard_space

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@lru_cache(maxsize=None)
def group_matrices(stype: str, dim: int) -> tuple[BitMatrix, ...]:
    stack = group_array(standard_space(stype, dim))
    return tuple(_batch.to_matrix(r, dim) for r in stack)


@lru_cache(maxsize=None)
def involutions(stype: str, dim: int) -> tuple:
    space = standard_space(stype, dim)
    stack = group_array(space)
    return tuple(_trusted_involution(space, _batch.to_matrix(r, dim)) for r in stack[involution_mask(stack)])


def matrices(max_rows: int = 10, max_cols: int = 10, square: bool = False):
    @st.composite
    def build(draw):
        r = draw(st.integers(0, max_rows))
        c = r if square else draw(st.integers(0, max_cols))
        rows = draw(st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r))
        return BitMatrix.from_rows(rows, c)

    return build()


def group_elements(stype: str, dim: int):
    return st.sampled_from(group_matrices(stype, dim))


@pytest.fixture(scope="session")
def to4():
    return standard_space(SpaceType.EVO, 4)


@pytest.fixture(scope="session")
def to6():
    return standard_space(SpaceType.EVO, 6)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
