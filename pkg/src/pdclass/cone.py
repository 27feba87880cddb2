"""Exact decision of whether a rational polyhedral cone is {0}.

The cone is the solution set of finitely many homogeneous inequalities
``n . x >= 0``.  It is trivial exactly when the dual cone spanned by the
normals is the whole space, i.e. when every signed coordinate direction is a
nonnegative combination of normals.  Each direction is settled by a Phase-I
simplex over Fractions; the least-index rule makes every solve terminate, and
whichever way the decision goes, the returned proof object (witness point or
Farkas certificate) is re-verified before it leaves this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Vector = tuple[Fraction, ...]


@dataclass(frozen=True, eq=False)
class ConeSystem:
    """Normals of the inequalities; the cone is {x : n . x >= 0 for all n}."""

    normals: tuple[Vector, ...]

    @property
    def dimension(self) -> int:
        return len(self.normals[0])

    def contains(self, point: Sequence[Fraction | int]) -> bool:
        return all(_dot(n, point) >= 0 for n in self.normals)


@dataclass(frozen=True, eq=False)
class FarkasCertificate:
    """Nonnegative combinations of the normals, one per signed direction,
    stored in the order produced by :func:`signed_directions`."""

    dimension: int
    combinations: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True, eq=False)
class ConeDecision:
    trivial: bool
    witness: tuple[int, ...] | None
    certificate: FarkasCertificate | None


def make_cone_system(normals: Sequence[Sequence[Fraction | int]]) -> ConeSystem:
    if not normals:
        raise ValueError("a cone system needs at least one normal")
    dim = len(normals[0])
    if dim == 0 or any(len(n) != dim for n in normals):
        raise ValueError("normals must share a positive dimension")
    return ConeSystem(tuple(tuple(Fraction(x) for x in n) for n in normals))


def signed_directions(dimension: int) -> tuple[tuple[int, ...], ...]:
    """The fixed solve order +e1, -e1, +e2, -e2, ..."""
    out = []
    for i in range(dimension):
        unit = tuple(1 if j == i else 0 for j in range(dimension))
        out.append(unit)
        out.append(tuple(-x for x in unit))
    return tuple(out)


def _dot(a: Sequence[Fraction | int], b: Sequence[Fraction | int]) -> Fraction:
    return Fraction(sum(x * y for x, y in zip(a, b)))


def _coprime_integers(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Clear denominators and divide by the gcd; the sign is preserved, since
    callers normalize points of a cone and the cone is not symmetric."""
    scale = lcm(*(x.denominator for x in vec))
    ints = [int(x * scale) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def _phase_one(
    columns: Sequence[Vector], target: Sequence[int]
) -> tuple[bool, tuple[Fraction, ...]]:
    """Is ``target`` a nonnegative combination of ``columns``?

    Returns (True, coefficients) or (False, y) where y separates: y . column
    <= 0 for every column while y . target > 0.  Entering and leaving choices
    both use the least-index rule, so the solve cannot cycle.
    """
    m = len(columns)
    r = len(target)
    sigma = [1 if t >= 0 else -1 for t in target]
    rows = [
        [Fraction(sigma[i] * columns[j][i]) for j in range(m)]
        + [Fraction(1 if k == i else 0) for k in range(r)]
        for i in range(r)
    ]
    rhs = [Fraction(abs(t)) for t in target]
    basis = [m + i for i in range(r)]
    cost = [Fraction(0)] * m + [Fraction(1)] * r
    while True:
        reduced = [
            cost[j] - sum(cost[basis[i]] * rows[i][j] for i in range(r))
            for j in range(m + r)
        ]
        entering = next((j for j in range(m + r) if reduced[j] < 0), None)
        if entering is None:
            break
        best = None
        for i in range(r):
            if rows[i][entering] > 0:
                ratio = rhs[i] / rows[i][entering]
                if best is None or ratio < best[0] or (
                    ratio == best[0] and basis[i] < basis[best[1]]
                ):
                    best = (ratio, i)
        assert best is not None, "phase-I objective is bounded below"
        leave = best[1]
        pivot = rows[leave][entering]
        rows[leave] = [x / pivot for x in rows[leave]]
        rhs[leave] /= pivot
        for i in range(r):
            if i != leave and rows[i][entering] != 0:
                factor = rows[i][entering]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[leave])]
                rhs[i] -= factor * rhs[leave]
        basis[leave] = entering
    objective = sum(cost[basis[i]] * rhs[i] for i in range(r))
    if objective == 0:
        coeffs = [Fraction(0)] * m
        for i, b in enumerate(basis):
            if b < m:
                coeffs[b] = rhs[i]
        assert all(c >= 0 for c in coeffs)
        assert all(
            sum(coeffs[j] * columns[j][i] for j in range(m)) == target[i]
            for i in range(r)
        )
        return True, tuple(coeffs)
    reduced = [
        cost[j] - sum(cost[basis[i]] * rows[i][j] for i in range(r))
        for j in range(m + r)
    ]
    y = tuple(sigma[i] * (1 - reduced[m + i]) for i in range(r))
    assert all(_dot(y, col) <= 0 for col in columns)
    assert _dot(y, target) > 0
    return False, y


def decide_cone(sys: ConeSystem) -> ConeDecision:
    """TRIVIAL with a full Farkas certificate, or NONTRIVIAL with a nonzero
    integer point of the cone; the first infeasible direction in the fixed
    solve order determines the witness, so the answer is deterministic."""
    columns = sys.normals
    combinations = []
    for direction in signed_directions(sys.dimension):
        feasible, payload = _phase_one(columns, direction)
        if not feasible:
            witness = _coprime_integers([-y for y in payload])
            assert any(witness) and sys.contains(witness)
            return ConeDecision(trivial=False, witness=witness, certificate=None)
        combinations.append(payload)
    certificate = FarkasCertificate(
        dimension=sys.dimension, combinations=tuple(combinations)
    )
    assert verify_certificate(sys, certificate)
    return ConeDecision(trivial=True, witness=None, certificate=certificate)


def verify_certificate(sys: ConeSystem, cert: FarkasCertificate) -> bool:
    """Replay the rational arithmetic: every combination must be nonnegative
    and sum exactly to its direction, and all 2r directions must be covered."""
    directions = signed_directions(sys.dimension)
    if cert.dimension != sys.dimension or len(cert.combinations) != len(directions):
        return False
    m = len(sys.normals)
    for direction, coeffs in zip(directions, cert.combinations):
        if len(coeffs) != m or any(c < 0 for c in coeffs):
            return False
        for i in range(sys.dimension):
            total = sum(coeffs[j] * sys.normals[j][i] for j in range(m))
            if total != direction[i]:
                return False
    return True
