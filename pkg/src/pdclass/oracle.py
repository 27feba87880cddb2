"""Brute-force cross-checks for the main algorithms.

The lattice search is a deliberately dumb one-sided decider: scanning a box
can find a cone point the simplex route must then agree on, but an empty box
proves nothing.  The survey runs every grading of the requested types through
all routes at once and reports disagreements as data instead of crashing.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .classifier import classify, grading_cone_system
from .cone import ConeSystem, _coprime_integers
from .errors import InternalInconsistency
from .grading import make_grading
from .rootsys import build_root_system, validate_type_rank
from .structures import new_complex_structure, positive_system_of, validate_structure

DEFAULT_RADIUS = 3

# lowest rank at which each family is defined and not a duplicate of another
_FAMILY_RANKS = {
    "A": lambda max_rank: range(1, max_rank + 1),
    "B": lambda max_rank: range(2, max_rank + 1),
    "C": lambda max_rank: range(2, max_rank + 1),
    "D": lambda max_rank: range(4, max_rank + 1),
    "E": lambda max_rank: [r for r in (6, 7, 8) if r <= max_rank],
    "F": lambda max_rank: [4] if max_rank >= 4 else [],
    "G": lambda max_rank: [2] if max_rank >= 2 else [],
}


@dataclass(frozen=True, eq=False)
class SearchBox:
    """Integer box [-radius, radius]^dimension to scan."""

    radius: int
    dimension: int

    def __post_init__(self):
        if self.radius < 1:
            raise ValueError(f"radius must be >= 1, got {self.radius}")
        if self.dimension < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dimension}")


@dataclass(frozen=True, eq=False)
class SurveyRow:
    type_label: str
    rank: int
    labels: tuple[int, ...]
    classical: bool
    hermitian: bool
    m0: int
    dim_D: int


@dataclass(frozen=True, eq=False)
class SurveyAggregate:
    type_label: str
    rank: int
    total: int
    n_classical: int
    n_nonclassical: int
    n_hermitian: int


@dataclass(frozen=True, eq=False)
class SurveyResult:
    rows: tuple[SurveyRow, ...]
    aggregates: tuple[SurveyAggregate, ...]
    failures: tuple[tuple[str, str], ...]


def lattice_cone_search(system: ConeSystem, box: SearchBox) -> tuple[int, ...] | None:
    """First nonzero integer point of the box satisfying every inequality, in
    lexicographic scan order; None when the box holds no cone point.

    One-sided: None never proves the cone trivial.
    """
    if box.dimension != system.dimension:
        raise ValueError(
            f"box dimension {box.dimension} != system dimension {system.dimension}"
        )
    rows = [_coprime_integers(normal) for normal in system.normals]
    coords = range(-box.radius, box.radius + 1)
    for point in product(coords, repeat=box.dimension):
        if not any(point):
            continue
        if all(sum(a * x for a, x in zip(row, point)) >= 0 for row in rows):
            return point
    return None


def sweep_instances(
    types: Iterable[str], max_rank: int
) -> list[tuple[str, int, tuple[int, ...]]]:
    """All (type, rank, labels) triples of the sweep, lexicographically."""
    instances = []
    for type_label in sorted(set(types)):
        ranks = _FAMILY_RANKS.get(type_label)
        if ranks is None:
            validate_type_rank(type_label, 1)
        for rank in ranks(max_rank):
            for labels in product((0, 1, 2), repeat=rank):
                if 1 in labels:
                    instances.append((type_label, rank, labels))
    return instances


def _structures_checks(g) -> None:
    ns = new_complex_structure(g)
    ok, violations = validate_structure(g, ns.structure.roots)
    if not ok:
        raise InternalInconsistency(f"new structure invalid: {violations[0]}")
    if not ns.differs_from_original:
        raise InternalInconsistency("new structure equals the original one")
    if not ns.projection_holomorphic:
        raise InternalInconsistency("projection lost holomorphy")
    positive_system_of(g, ns.structure)
    rs = g.root_system
    if rs.root_set_sum(ns.splitting.minus_roots, ns.splitting.minus_roots):
        raise InternalInconsistency("minus half not sum-free")


def check_instance(
    type_label: str, rank: int, labels: tuple[int, ...], radius: int = DEFAULT_RADIUS
) -> SurveyRow:
    """Classify one grading and cross-check every route against the others."""
    rs = build_root_system(type_label, rank)
    g = make_grading(rs, labels)
    report = classify(g)
    system = grading_cone_system(g)
    point = lattice_cone_search(system, SearchBox(radius=radius, dimension=rank))
    if point is not None and not report.classical:
        raise InternalInconsistency(
            f"lattice point {point} found in a cone declared trivial"
        )
    if report.classical:
        witness = report.witness_classical
        if max(abs(x) for x in witness) <= radius and point is None:
            raise InternalInconsistency(
                f"witness {witness} inside the box but the scan found nothing"
            )

    if not report.classical and report.hermitian_type:
        _structures_checks(g)
    return SurveyRow(
        type_label=type_label,
        rank=rank,
        labels=labels,
        classical=report.classical,
        hermitian=bool(report.hermitian_type),
        m0=report.m0,
        dim_D=report.dim_D,
    )


def survey_crosscheck(
    types: Sequence[str],
    max_rank: int,
    radius: int = DEFAULT_RADIUS,
    jobs: int = 1,
) -> SurveyResult:
    """Run every sweep grading through all routes; tabulate and collect
    failures rather than raising.

    Instance order is lexicographic and the merge preserves it, so the result
    is identical for any job count.
    """
    instances = sweep_instances(types, max_rank)

    def run(instance):
        type_label, rank, labels = instance
        try:
            return check_instance(type_label, rank, labels, radius), None
        except Exception as exc:  # noqa: BLE001 - failures are data here
            domain = f"{type_label}{rank}/" + ",".join(str(c) for c in labels)
            return None, (domain, f"{type(exc).__name__}: {exc}")

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(run, instances))
    else:
        outcomes = [run(instance) for instance in instances]

    rows = tuple(row for row, _ in outcomes if row is not None)
    failures = tuple(failure for _, failure in outcomes if failure is not None)
    aggregates = []
    for type_label, rank in sorted({(r.type_label, r.rank) for r in rows}):
        group = [r for r in rows if (r.type_label, r.rank) == (type_label, rank)]
        aggregates.append(
            SurveyAggregate(
                type_label=type_label,
                rank=rank,
                total=len(group),
                n_classical=sum(1 for r in group if r.classical),
                n_nonclassical=sum(1 for r in group if not r.classical),
                n_hermitian=sum(1 for r in group if r.hermitian),
            )
        )
    return SurveyResult(rows=rows, aggregates=tuple(aggregates), failures=failures)
