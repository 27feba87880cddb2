"""Shared fixtures and independent oracles used to cross-check the library.

The oracles here deliberately use different algorithms from the package:
root sets come from reflection closure instead of height recursion, cone
nontriviality from variable elimination instead of simplex feasibility, and
structure enumeration from filtering the full sign hypercube.

This file also collects the acceptance-criterion outcomes and prints one
PASS/FAIL line per criterion at the end of the run.
"""
from __future__ import annotations

import itertools
import re
from fractions import Fraction
from math import gcd, lcm

import pytest

from pdclass.rootsys import build_root_system

ACCEPTANCE_TITLES = {
    1: "route agreement across the full sweep",
    2: "triple-sum reduction, exclusion load-bearing",
    3: "compact part generated by the noncompact part",
    4: "rank-two worked fixtures with oracle confirmation",
    5: "vanishing predicate on seeded random weights",
    6: "new-structure suite on non-classical Hermitian cases",
    7: "cone decisions under fuzzing",
    8: "enumeration counts against the hypercube oracle",
    9: "survey byte-determinism across runs and task counts",
}

# criterion number -> (passed, detail); details set by the tests themselves
_acceptance_outcomes: dict[int, bool] = {}
_acceptance_details: dict[int, str] = {}


def acceptance_detail(criterion: int, text: str) -> None:
    _acceptance_details[criterion] = text


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    match = re.search(r"test_criterion_(\d+)", report.nodeid)
    if match:
        _acceptance_outcomes[int(match.group(1))] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_outcomes:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for criterion in sorted(ACCEPTANCE_TITLES):
        if criterion not in _acceptance_outcomes:
            continue
        status = "PASS" if _acceptance_outcomes[criterion] else "FAIL"
        line = f"ACCEPTANCE {criterion}: {status} - {ACCEPTANCE_TITLES[criterion]}"
        detail = _acceptance_details.get(criterion)
        if detail:
            line += f" [{detail}]"
        terminalreporter.write_line(line)


def reflection_closure_roots(cartan):
    """Close the simple roots under all simple reflections; returns a set."""
    rank = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]

    def reflect(v, i):
        c = sum(v[j] * cartan[j][i] for j in range(rank))
        out = list(v)
        out[i] -= c
        return tuple(out)

    closed = set(simple) | {tuple(-x for x in s) for s in simple}
    frontier = list(closed)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rank):
                w = reflect(v, i)
                if w not in closed:
                    closed.add(w)
                    nxt.append(w)
        frontier = nxt
    return closed


def eliminate_first_variable(rows):
    """One step of exact variable elimination for a system {row . x >= 0}."""
    pos = [r for r in rows if r[0] > 0]
    neg = [r for r in rows if r[0] < 0]
    zero = [r[1:] for r in rows if r[0] == 0]
    derived = set()
    for p in pos:
        for n in neg:
            combo = tuple(p[0] * n[k] - n[0] * p[k] for k in range(1, len(p)))
            derived.add(_coprime(combo))
    for z in zero:
        derived.add(_coprime(z))
    return sorted(derived)


def _coprime(vec):
    vec = tuple(Fraction(x) for x in vec)
    mult = 1
    for x in vec:
        mult = lcm(mult, x.denominator)
    ints = tuple(int(x * mult) for x in vec)
    g = 0
    for x in ints:
        g = gcd(g, x)
    return ints if g in (0, 1) else tuple(x // g for x in ints)


def cone_has_nonzero_point(rows, dim):
    """Exact decision: does {x != 0 : row . x >= 0 for all rows} exist?

    Recursive elimination; sound and complete for any rational system.
    """
    rows = [tuple(r) for r in rows]
    if dim == 1:
        firsts = [r[0] for r in rows]
        return all(c >= 0 for c in firsts) or all(c <= 0 for c in firsts)
    projected = eliminate_first_variable(rows)
    if cone_has_nonzero_point(projected, dim - 1):
        return True
    firsts = [r[0] for r in rows]
    return all(c >= 0 for c in firsts) or all(c <= 0 for c in firsts)


def brute_force_structures(grading):
    """All valid half-selections of the nonzero-grade roots, by filtering the
    full sign hypercube against the three defining conditions."""
    rs = grading.root_system
    isotropy = set(grading.isotropy_roots)
    reps = [g for g in rs.positive_roots if g not in isotropy]
    assert len(reps) <= 14, "hypercube oracle limited to small systems"
    valid = []
    for signs in itertools.product((1, -1), repeat=len(reps)):
        chosen = {tuple(s * x for x in rep) for s, rep in zip(signs, reps)}
        if _is_valid_structure(rs, isotropy, chosen):
            valid.append(frozenset(chosen))
    return set(valid)


def _is_valid_structure(rs, isotropy, chosen):
    for v in isotropy:
        for s in chosen:
            t = tuple(a + b for a, b in zip(v, s))
            if t in rs.roots and t not in chosen:
                return False
    for s1 in chosen:
        for s2 in chosen:
            t = tuple(a + b for a, b in zip(s1, s2))
            if t in rs.roots and t not in chosen:
                return False
    return True


def lattice_points_in_cone(normals, radius, dim):
    """All integer points in the box satisfying every inequality (slow scan)."""
    hits = []
    for point in itertools.product(range(-radius, radius + 1), repeat=dim):
        if all(x == 0 for x in point):
            continue
        if all(
            sum(Fraction(a) * x for a, x in zip(row, point)) >= 0 for row in normals
        ):
            hits.append(point)
    return hits


@pytest.fixture(scope="session")
def a1():
    return build_root_system("A", 1)


@pytest.fixture(scope="session")
def a2():
    return build_root_system("A", 2)


@pytest.fixture(scope="session")
def c2():
    return build_root_system("C", 2)


@pytest.fixture(scope="session")
def g2():
    return build_root_system("G", 2)


SWEEP_SYSTEMS = [
    ("A", 1),
    ("A", 2),
    ("A", 3),
    ("A", 4),
    ("B", 2),
    ("B", 3),
    ("B", 4),
    ("C", 2),
    ("C", 3),
    ("C", 4),
    ("D", 4),
    ("G", 2),
    ("F", 4),
]


def sweep_label_vectors(rank):
    """Every grading label vector: entries in {0,1,2} with at least one 1."""
    for labels in itertools.product((0, 1, 2), repeat=rank):
        if 1 in labels:
            yield labels
