"""Shared oracles: brute-force closure and small named groups."""

import random
import sys

import pytest

from chiralscope import corpus
from chiralscope.group import PermGroup
from chiralscope.perm import Permutation


def closure(gens, degree):
    """All elements of <gens> by breadth-first multiplication, as image tuples."""
    ident = tuple(range(1, degree + 1))
    seen = {ident}
    queue = [ident]
    gimgs = [g.images for g in gens]
    for a in queue:
        for g in gimgs:
            b = tuple(g[i - 1] for i in a)
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return seen


def perm(text, degree):
    return Permutation.parse(text, degree)


def sym(n):
    gens = [perm("(1,2)", n), perm("(" + ",".join(map(str, range(1, n + 1))) + ")", n)]
    return PermGroup(n, gens)


# groups small enough for brute-force oracles
SMALL_NAMES = ["A4", "A5", "A6", "psl2:7", "psl2:8", "psl2:11", "psl2:13"]


@pytest.fixture(scope="session")
def small_groups():
    return {name: corpus.lookup(name).group() for name in SMALL_NAMES}


@pytest.fixture(scope="session")
def m11():
    return corpus.mathieu("M11").group()


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(lines):
        terminalreporter.write_line(lines[k])
