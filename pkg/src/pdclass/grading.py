"""Period-domain data: a {0,1,2} label per simple root and what follows from it.

The label vector induces an integer grade on every root (the value of the
grading element), and the grade's parity splits the system into compact and
noncompact roots.  Everything downstream (the classification criteria, the
curvature signatures, the invariant complex structures) is a function of the
sets materialized here.

Convention: positive roots of nonzero grade index the *descending* side of
the flag (the tangent directions of the domain), so ``noncompact_positive``
is the index set of the fiber of the anti-holomorphic half of the horizontal
distribution.  All criteria are invariant under flipping this convention
globally; the test suite asserts that.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import CompactForm, LabelOutOfRange
from .rootsys import Root, RootSystem, root_key

CenterBasis = tuple[tuple[int, ...], ...]


def _negate(alpha: Root) -> Root:
    return tuple(-x for x in alpha)


def rational_nullspace(rows: Sequence[Sequence[int]], dim: int) -> CenterBasis:
    """Basis of {x : row . x = 0 for all rows}, exact, deterministically ordered.

    Each basis vector is scaled to coprime integers with its first nonzero
    coordinate positive.
    """
    matrix = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(dim):
        pivot_row = next((i for i in range(r, len(matrix)) if matrix[i][col] != 0), None)
        if pivot_row is None:
            continue
        matrix[r], matrix[pivot_row] = matrix[pivot_row], matrix[r]
        inv = matrix[r][col]
        matrix[r] = [x / inv for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][col] != 0:
                factor = matrix[i][col]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivots.append(col)
        r += 1
    basis = []
    for free in range(dim):
        if free in pivots:
            continue
        vec = [Fraction(0)] * dim
        vec[free] = Fraction(1)
        for row_index, col in enumerate(pivots):
            vec[col] = -matrix[row_index][free]
        basis.append(_integer_normalized(vec))
    return tuple(basis)


def _integer_normalized(vec: Sequence[Fraction]) -> tuple[int, ...]:
    scale = lcm(*(x.denominator for x in vec)) if vec else 1
    ints = [int(x * scale) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    first = next((x for x in ints if x != 0), 0)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


@dataclass(frozen=True, eq=False)
class HodgeGrading:
    """One grading of a root system, with every derived root set materialized.

    Sets come in canonical order (sorted by :func:`rootsys.root_key`) wherever
    order matters for deterministic witnesses and traces.
    """

    root_system: RootSystem
    labels: tuple[int, ...]
    # grade-0 roots, both signs (the roots of the isotropy subalgebra)
    isotropy_roots: frozenset[Root]
    compact_roots: frozenset[Root]
    noncompact_roots: frozenset[Root]
    compact_positive: tuple[Root, ...]
    noncompact_positive: tuple[Root, ...]
    # compact positive roots of nonzero grade (the fiber K/V directions)
    fiber_roots: tuple[Root, ...]
    # all positive roots of nonzero grade (the tangent directions of D)
    tangent_roots: tuple[Root, ...]
    compact_center_basis: CenterBasis

    def grade_of(self, alpha: Sequence[int]) -> int:
        """Value of the grading element on a coefficient vector (linear)."""
        return sum(c * n for c, n in zip(self.labels, alpha))

    def grading_element(self) -> tuple[int, ...]:
        """Coordinates of the grading element in the basis dual to the simple
        roots; by definition these are the labels themselves."""
        return self.labels

    def is_compact(self, alpha: Root) -> bool:
        return self.grade_of(alpha) % 2 == 0

    def root_partition(self) -> dict[str, object]:
        return {
            "isotropy": self.isotropy_roots,
            "compact_positive": self.compact_positive,
            "noncompact_positive": self.noncompact_positive,
            "fiber": self.fiber_roots,
            "tangent": self.tangent_roots,
        }

    @property
    def dim_D(self) -> int:
        """Complex dimension of the domain: positive roots of nonzero grade."""
        return len(self.tangent_roots)

    @property
    def dim_KV(self) -> int:
        """Complex dimension of the compact fiber K/V."""
        return len(self.fiber_roots)

    @property
    def m0(self) -> int:
        """Codimension of the fiber in the domain: dim_D - dim_KV; equals the
        number of positive noncompact roots."""
        return len(self.noncompact_positive)

    @property
    def two_rho_nc(self) -> tuple[int, ...]:
        """Coefficient vector of the sum of all positive noncompact roots."""
        out = [0] * self.root_system.rank
        for beta in self.noncompact_positive:
            for i, x in enumerate(beta):
                out[i] += x
        return tuple(out)

    def compact_center(self) -> tuple[int, CenterBasis]:
        """Dimension and basis of {z : alpha(z) = 0 for every compact root},
        in dual-basis coordinates.  Dimension 1 signals Hermitian type."""
        return len(self.compact_center_basis), self.compact_center_basis


def make_grading(rs: RootSystem, labels: Sequence[int]) -> HodgeGrading:
    """Validate a label vector and materialize the grading it induces.

    Labels live in {0,1,2}: 1 on the noncompact simple roots, 0 on simple
    roots of the isotropy subalgebra, 2 on the remaining compact simples.
    At least one label must be 1, otherwise every root is compact and the
    datum describes a compact form rather than a period domain.
    """
    labels = tuple(labels)
    if len(labels) != rs.rank:
        raise LabelOutOfRange(
            f"expected {rs.rank} labels for {rs.type_label}{rs.rank}, got {len(labels)}"
        )
    bad = [c for c in labels if c not in (0, 1, 2)]
    if bad:
        raise LabelOutOfRange(f"labels must lie in {{0,1,2}}, got {bad[0]}")
    if 1 not in labels:
        raise CompactForm("no label equals 1: every root is compact")

    def grade(alpha: Root) -> int:
        return sum(c * n for c, n in zip(labels, alpha))

    isotropy = frozenset(a for a in rs.roots if grade(a) == 0)
    compact = frozenset(a for a in rs.roots if grade(a) % 2 == 0)
    noncompact = frozenset(rs.roots - compact)
    compact_positive = tuple(a for a in rs.positive_roots if a in compact)
    noncompact_positive = tuple(a for a in rs.positive_roots if a in noncompact)
    fiber = tuple(a for a in compact_positive if a not in isotropy)
    tangent = tuple(a for a in rs.positive_roots if a not in isotropy)
    # some simple root has label 1, so its parity is odd
    assert noncompact_positive
    assert isotropy == frozenset(_negate(a) for a in isotropy)
    center = rational_nullspace(sorted(compact_positive, key=root_key), rs.rank)
    return HodgeGrading(
        root_system=rs,
        labels=labels,
        isotropy_roots=isotropy,
        compact_roots=compact,
        noncompact_roots=noncompact,
        compact_positive=compact_positive,
        noncompact_positive=noncompact_positive,
        fiber_roots=fiber,
        tangent_roots=tangent,
        compact_center_basis=center,
    )
