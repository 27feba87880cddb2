"""Invariant complex structures on a graded domain.

A structure is encoded by the root set S of its anti-holomorphic tangent
half: one root from each pair {a, -a} outside the isotropy, invariant under
adding isotropy roots, and closed under root addition.  Conjugation acts as
negation throughout (the Cartan subalgebra sits inside the compact part, so
conjugation flips root spaces across zero).

The module builds the distinguished splitting of the noncompact roots that
exists exactly when the symmetric quotient G/K is Hermitian, assembles the
associated new structure (fiber directions plus the minus half of the
splitting), and can enumerate every structure of a small system outright.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import HermitianAnomaly, NotHermitian, TooLarge, ValidationFailed
from .grading import HodgeGrading
from .rootsys import Root, root_key


@dataclass(frozen=True, eq=False)
class HermitianSplitting:
    """Center direction z of the compact part, normalized so every noncompact
    root evaluates to +1 or -1, and the two halves it cuts."""

    center_direction: tuple[Fraction, ...]
    plus_roots: frozenset[Root]
    minus_roots: frozenset[Root]


@dataclass(frozen=True, eq=False)
class ComplexStructure:
    grading: HodgeGrading
    roots: frozenset[Root]
    parabolic_roots: frozenset[Root]

    def sorted_roots(self) -> tuple[Root, ...]:
        return tuple(sorted(self.roots, key=root_key))


@dataclass(frozen=True, eq=False)
class NewStructure:
    structure: ComplexStructure
    splitting: HermitianSplitting
    differs_from_original: bool
    projection_holomorphic: bool


def _negate(alpha: Root) -> Root:
    return tuple(-x for x in alpha)


def hermitian_splitting(g: HodgeGrading) -> HermitianSplitting | None:
    """The splitting, or None when the compact part has no center.

    Any failure past the center-dimension gate is mathematically unexpected
    and raises ``HermitianAnomaly`` instead of being smoothed over.
    """
    dim, basis = g.compact_center()
    if dim == 0:
        return None
    if dim >= 2 and g.compact_positive:
        raise HermitianAnomaly(
            f"compact center has dimension {dim} with compact roots present"
        )
    direction = basis[0]
    values = {b: sum(c * x for c, x in zip(direction, b)) for b in g.noncompact_roots}
    magnitudes = {abs(v) for v in values.values()}
    if 0 in magnitudes or len(magnitudes) != 1:
        raise HermitianAnomaly(
            f"no scaling of the center direction gives values +-1: {sorted(magnitudes)}"
        )
    scale = Fraction(1, magnitudes.pop())
    lowest = next(i for i, c in enumerate(g.labels) if c == 1)
    if direction[lowest] < 0:
        scale = -scale
    z = tuple(Fraction(x) * scale for x in direction)
    plus = frozenset(b for b, v in values.items() if v * scale == 1)
    minus = frozenset(g.noncompact_roots - plus)
    if minus != frozenset(_negate(b) for b in plus):
        raise HermitianAnomaly("halves are not negatives of each other")
    rs = g.root_system
    if rs.root_set_sum(g.compact_roots, minus) - minus:
        raise HermitianAnomaly("minus half is not invariant under the compact part")
    if rs.root_set_sum(minus, minus):
        raise HermitianAnomaly("minus half is not abelian")
    return HermitianSplitting(center_direction=z, plus_roots=plus, minus_roots=minus)


def validate_structure(
    g: HodgeGrading, candidate
) -> tuple[bool, tuple[tuple[str, tuple], ...]]:
    """Check the three structure conditions; violations come back as
    (condition, data) pairs rather than exceptions.

    The strong closure condition is the one tested.  Given the other two
    conditions, the weak form (sums may also fall into the isotropy) is
    provably equivalent; the checker recomputes both and raises
    ``ValidationFailed`` if they ever split, since that would contradict the
    equivalence rather than merely reject the candidate.
    """
    rs = g.root_system
    chosen = frozenset(tuple(a) for a in candidate)
    violations: list[tuple[str, tuple]] = []
    outside = [a for a in chosen if a not in rs.roots or a in g.isotropy_roots]
    if outside:
        violations.append(("universe", tuple(sorted(outside, key=root_key))))
    expected = rs.roots - g.isotropy_roots
    if chosen | frozenset(_negate(a) for a in chosen) != expected or (
        chosen & frozenset(_negate(a) for a in chosen)
    ):
        violations.append(("half_selection", ()))
    for v in sorted(g.isotropy_roots, key=root_key):
        for s in sorted(chosen, key=root_key):
            t = tuple(x + y for x, y in zip(v, s))
            if t in rs.roots and t not in chosen:
                violations.append(("isotropy_invariance", (v, s, t)))
    strong_ok = True
    weak_ok = True
    for s1 in sorted(chosen, key=root_key):
        for s2 in sorted(chosen, key=root_key):
            t = tuple(x + y for x, y in zip(s1, s2))
            if t in rs.roots and t not in chosen:
                strong_ok = False
                violations.append(("sum_closure", (s1, s2, t)))
                if t not in g.isotropy_roots:
                    weak_ok = False
    others_ok = not any(v[0] in ("half_selection", "isotropy_invariance") for v in violations)
    if others_ok and not outside and weak_ok and not strong_ok:
        raise ValidationFailed(
            "weak and strong closure disagree on an otherwise valid candidate"
        )
    return not violations, tuple(violations)


def make_structure(g: HodgeGrading, candidate) -> ComplexStructure:
    """Validate and wrap a root set, attaching its parabolic (the negated set
    together with the isotropy roots)."""
    ok, violations = validate_structure(g, candidate)
    if not ok:
        raise ValidationFailed(f"invalid structure: {violations[0]}")
    chosen = frozenset(tuple(a) for a in candidate)
    parabolic = frozenset(_negate(a) for a in chosen) | g.isotropy_roots
    return ComplexStructure(grading=g, roots=chosen, parabolic_roots=parabolic)


def new_complex_structure(g: HodgeGrading) -> NewStructure:
    """Fiber directions plus the minus half of the Hermitian splitting.

    Requires the splitting; validates everything it claims, including that
    the parabolic takes the predicted shape (negated fiber, plus half,
    isotropy)."""
    hs = hermitian_splitting(g)
    if hs is None:
        raise NotHermitian("the compact part has no center: no splitting exists")
    s = frozenset(g.fiber_roots) | hs.minus_roots
    cs = make_structure(g, s)
    predicted = (
        frozenset(_negate(a) for a in g.fiber_roots)
        | hs.plus_roots
        | g.isotropy_roots
    )
    if parabolic_of(g, cs) != predicted:
        raise ValidationFailed("parabolic of the new structure has the wrong shape")
    return NewStructure(
        structure=cs,
        splitting=hs,
        differs_from_original=s != frozenset(g.tangent_roots),
        projection_holomorphic=is_projection_holomorphic(g, cs, hs),
    )


def parabolic_of(g: HodgeGrading, cs: ComplexStructure) -> frozenset[Root]:
    """The parabolic root set of a structure, re-checked for closure and for
    covering the whole system together with its opposite."""
    rs = g.root_system
    roots = cs.parabolic_roots
    for p1 in sorted(roots, key=root_key):
        for p2 in sorted(roots, key=root_key):
            t = tuple(x + y for x, y in zip(p1, p2))
            if t in rs.roots and t not in roots:
                raise ValidationFailed(f"parabolic not closed: {p1} + {p2} = {t}")
    if roots | frozenset(_negate(a) for a in roots) != rs.roots:
        raise ValidationFailed("parabolic union its opposite misses roots")
    return roots


def positive_system_of(
    g: HodgeGrading, cs: ComplexStructure
) -> tuple[frozenset[Root], tuple[Root, ...]]:
    """The structure's root set together with the positive isotropy roots is
    a positive system; returns it with its indecomposable (simple) elements."""
    rs = g.root_system
    isotropy_positive = frozenset(
        a for a in rs.positive_roots if a in g.isotropy_roots
    )
    positive = cs.roots | isotropy_positive
    if positive | frozenset(_negate(a) for a in positive) != rs.roots or (
        positive & frozenset(_negate(a) for a in positive)
    ):
        raise ValidationFailed("structure does not induce a half-system")
    members = sorted(positive, key=root_key)
    for p1 in members:
        for p2 in members:
            t = tuple(x + y for x, y in zip(p1, p2))
            if t in rs.roots and t not in positive:
                raise ValidationFailed(f"positive system not closed: {p1} + {p2}")
    sums = {
        tuple(x + y for x, y in zip(p1, p2))
        for p1 in members
        for p2 in members
    }
    simples = tuple(p for p in members if p not in sums)
    return positive, simples


def is_projection_holomorphic(
    g: HodgeGrading, cs: ComplexStructure, hs: HermitianSplitting
) -> bool:
    """Whether the structure's noncompact half matches the splitting's minus
    half, i.e. the fibration over G/K respects both complex structures."""
    return frozenset(a for a in cs.roots if a in g.noncompact_roots) == hs.minus_roots


def enumerate_structures(
    g: HodgeGrading, limit: int | None = None, max_pairs: int = 24
) -> tuple[tuple[ComplexStructure, ...], bool]:
    """All invariant structures, by backtracking over one sign choice per
    root pair with eager constraint propagation.

    Pairs are visited in canonical order, positive representative first.
    Returns the structures in canonical sorted order plus a truncation flag
    when ``limit`` cut the search short.
    """
    rs = g.root_system
    reps = [a for a in rs.positive_roots if a not in g.isotropy_roots]
    if len(reps) > max_pairs:
        raise TooLarge(f"{len(reps)} root pairs exceeds the bound {max_pairs}")
    index_of: dict[Root, int] = {}
    for i, rep in enumerate(reps):
        index_of[rep] = i
        index_of[_negate(rep)] = i
    isotropy = sorted(g.isotropy_roots, key=root_key)
    found: list[frozenset[Root]] = []
    truncated = False

    def propagate(assignment: dict[int, Root], queue: list[Root]) -> bool:
        while queue:
            root = queue.pop()
            i = index_of[root]
            if i in assignment:
                if assignment[i] != root:
                    return False
                continue
            assignment[i] = root
            for v in isotropy:
                t = tuple(x + y for x, y in zip(v, root))
                if t in rs.roots:
                    queue.append(t)
            for other in list(assignment.values()):
                if other == root:
                    continue
                t = tuple(x + y for x, y in zip(other, root))
                if t in rs.roots:
                    if t in g.isotropy_roots:
                        return False
                    queue.append(t)
        return True

    def search(assignment: dict[int, Root]) -> bool:
        nonlocal truncated
        if truncated:
            return False
        next_index = next((i for i in range(len(reps)) if i not in assignment), None)
        if next_index is None:
            if limit is not None and len(found) >= limit:
                truncated = True
                return False
            chosen = frozenset(assignment.values())
            ok, _ = validate_structure(g, chosen)
            assert ok, "propagation admitted an invalid assignment"
            found.append(chosen)
            return True
        for candidate in (reps[next_index], _negate(reps[next_index])):
            branch = dict(assignment)
            if propagate(branch, [candidate]) and not search(branch):
                return False
        return True

    search({})
    structures = tuple(
        make_structure(g, chosen)
        for chosen in sorted(found, key=lambda s: tuple(sorted(s, key=root_key)))
    )
    return structures, truncated
