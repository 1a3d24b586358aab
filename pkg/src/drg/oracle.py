"""Independent resistance oracle: exact Laplacian solves on explicit graphs.

Effective resistance is computed from the combinatorial Laplacian with
exact rational elimination and compared, pair by pair, against the
potential-based formula r_j = 2*(phi_0+...+phi_{j-1})/(nk).  Agreement
must be exact, not approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .arrays import derive
from .graphs import DistancePartitionReport, LabeledGraph, verify_drg
from .potentials import compute_profile

SAMPLE_THRESHOLD = 30  # all pairs up to here, deterministic sample beyond
SAMPLE_PER_CLASS = 10


def _laplacian_plus_ones(g: LabeledGraph) -> linalg.Matrix:
    """L + (1/n) J: the rank-one correction makes the system nonsingular."""
    n = g.n
    shift = Fraction(1, n)
    m = [[shift] * n for _ in range(n)]
    for v in range(n):
        m[v][v] += g.degree(v)
    for u, v in g.edges:
        m[u][v] -= 1
        m[v][u] -= 1
    return m


def laplacian_resistance(
    g: LabeledGraph, u: int, v: int, method: str = "ones"
) -> Fraction:
    """Exact effective resistance between u and v with unit-resistance edges.

    method="ones" solves (L + J/n) x = e_u - e_v; method="grounded" pins
    vertex 0 and solves the reduced system.  Both give the same x_u - x_v
    because any solution of L x = e_u - e_v does.
    """
    if u == v:
        raise ValueError("resistance between a vertex and itself is not computed")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex index out of range")
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    if method == "ones":
        rhs = [Fraction(0)] * g.n
        rhs[u] = Fraction(1)
        rhs[v] = Fraction(-1)
        x = linalg.solve(_laplacian_plus_ones(g), rhs)
        return x[u] - x[v]
    if method == "grounded":
        keep = list(range(1, g.n))
        lap = [
            [
                Fraction(g.degree(r) if r == c else 0)
                - (1 if c in g.adjacency[r] else 0)
                for c in keep
            ]
            for r in keep
        ]
        rhs = [Fraction(1 if r == u else 0) - (1 if r == v else 0) for r in keep]
        y = linalg.solve(lap, rhs)
        x = [Fraction(0)] + y
        return x[u] - x[v]
    raise ValueError(f"unknown method {method!r}")


def resistance_matrix(g: LabeledGraph) -> list[list[Fraction]]:
    """All-pairs resistances from one exact inverse of L + J/n.

    r(u,v) = M_uu + M_vv - 2 M_uv where M = (L + J/n)^{-1}; the J/n part
    cancels in the quadratic form.
    """
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    m = linalg.invert(_laplacian_plus_ones(g))
    return [
        [m[u][u] + m[v][v] - 2 * m[u][v] for v in range(g.n)] for u in range(g.n)
    ]


@dataclass(frozen=True)
class ClassCheck:
    """Formula-vs-solver comparison for one distance class."""

    distance: int
    expected: Fraction
    pairs_checked: int
    mismatches: tuple[tuple[int, int, Fraction], ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


@dataclass(frozen=True)
class CrossValidation:
    graph_name: str
    drg_report: DistancePartitionReport
    classes: tuple[ClassCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.classes)


def cross_validate(g: LabeledGraph) -> CrossValidation:
    """Assert exact equality of solver resistances with the potential formula.

    Every pair of each distance class is checked (first SAMPLE_PER_CLASS
    pairs per class, in index order, for graphs above SAMPLE_THRESHOLD
    vertices).  Constancy within a class follows from equality with the
    single per-class formula value.
    """
    report = verify_drg(g)
    if not report.is_drg:
        raise ValueError(
            f"{g.name or 'graph'} is not distance-regular "
            f"({len(report.violations)} violation(s))"
        )
    if g.claimed_array is not None and report.observed_array != g.claimed_array:
        raise ValueError("observed intersection array differs from the claimed one")

    params = derive(report.observed_array)
    profile = compute_profile(params)
    dist = g.all_distances()
    rmat = resistance_matrix(g)

    classes = []
    for d in range(1, report.diameter + 1):
        pairs = [
            (u, v) for u in range(g.n) for v in range(u + 1, g.n) if dist[u][v] == d
        ]
        if g.n > SAMPLE_THRESHOLD:
            pairs = pairs[:SAMPLE_PER_CLASS]
        expected = profile.resistances[d - 1]
        mismatches = tuple(
            (u, v, rmat[u][v]) for u, v in pairs if rmat[u][v] != expected
        )
        classes.append(
            ClassCheck(
                distance=d,
                expected=expected,
                pairs_checked=len(pairs),
                mismatches=mismatches,
            )
        )
    return CrossValidation(
        graph_name=g.name or "graph", drg_report=report, classes=tuple(classes)
    )
