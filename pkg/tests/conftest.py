"""Shared fixtures for the test suite."""

from itertools import permutations

import pytest

from pseudodet import GroupTable


def s3_table() -> GroupTable:
    """Multiplication table of the symmetric group on 3 points, identity
    first; built independently from permutation composition."""
    perms = sorted(permutations(range(3)))  # identity (0,1,2) sorts first
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):  # (p*q)(i) = p(q(i))
        return tuple(p[q[i]] for i in range(3))

    return GroupTable([[index[compose(p, q)] for q in perms] for p in perms])


@pytest.fixture
def s3():
    return s3_table()
