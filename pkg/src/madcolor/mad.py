"""Exact maximum average degree via densest-subgraph max-flow tests."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .flow import FlowNetwork, max_flow
from .graph import Graph

BRUTEFORCE_MAX_N = 20


class NoEdgesError(ValueError):
    """Densest subgraph asked of an edgeless graph."""


@dataclass(frozen=True)
class DensestResult:
    subset: frozenset[int]
    density: Fraction


def density_network(g: Graph, p: int, q: int) -> FlowNetwork:
    """Goldberg's network for the test |E(S)|/|S| > p/q, scaled by q."""
    n, m = g.n, g.m
    net = FlowNetwork(n + 2, source=n, sink=n + 1)
    for v in range(n):
        net.add_arc(n, v, q * m)
    for u, v in g.edges():
        net.add_arc(u, v, q)
        net.add_arc(v, u, q)
    for v in range(n):
        net.add_arc(v, n + 1, q * m + 2 * p - q * g.degree(v))
    return net


def density_exceeds(g: Graph, p: int, q: int, backend: str | None = None) -> frozenset[int] | None:
    """A vertex set S with |E(S)|/|S| > p/q, or None if there is none."""
    if q <= 0:
        raise ValueError("q must be positive")
    if p < 0:
        raise ValueError("p/q must be nonnegative")
    if g.m == 0:
        raise NoEdgesError("graph has no edges")
    # density never exceeds m, and this keeps every sink capacity >= 0
    if p >= q * g.m:
        return None
    cut = max_flow(density_network(g, p, q), backend=backend)
    if cut.value >= q * g.m * g.n:
        return None
    subset = frozenset(v for v in cut.source_side if v < g.n)
    assert subset and Fraction(g.edges_within(subset), len(subset)) > Fraction(p, q)
    return subset


def exceeds_or_reaches(g: Graph, threshold: Fraction) -> frozenset[int] | None:
    """A set with density >= threshold, or None.

    Densities have denominators at most n, so density >= t is the same as
    density > t - 1/(n * den(t)).
    """
    t = Fraction(threshold)
    shifted = t - Fraction(1, g.n * t.denominator)
    if shifted < 0:
        return frozenset(range(g.n)) if g.n else None
    return density_exceeds(g, shifted.numerator, shifted.denominator)


def _density(g: Graph, s: frozenset[int]) -> Fraction:
    return Fraction(g.edges_within(s), len(s))


def densest_subgraph(g: Graph, backend: str | None = None) -> DensestResult:
    """Exact maximiser of |E(S)|/|S| by rational bisection."""
    if g.m == 0:
        raise NoEdgesError("graph has no edges")
    n = g.n
    u, v = g.edges()[0]
    best = frozenset((u, v))
    lo = Fraction(1, 2)
    whole = frozenset(range(n))
    if Fraction(g.m, n) > lo:
        best, lo = whole, Fraction(g.m, n)
    hi = Fraction(g.m)
    # distinct densities with denominators <= n are >= 1/(n(n-1)) apart
    gap = Fraction(1, n * (n - 1))
    limit = 4 * n * n
    while hi - lo >= gap:
        mid = ((lo + hi) / 2).limit_denominator(limit)
        s = density_exceeds(g, mid.numerator, mid.denominator, backend)
        if s is None:
            hi = mid
        else:
            best, lo = s, _density(g, s)
    if density_exceeds(g, lo.numerator, lo.denominator, backend) is not None:
        raise AssertionError("densest subgraph search failed its optimality check")
    return DensestResult(best, lo)


def mad(g: Graph, backend: str | None = None) -> Fraction:
    """Maximum average degree, exact; 0 for edgeless graphs."""
    if g.m == 0:
        return Fraction(0)
    return 2 * densest_subgraph(g, backend).density


def mad_bruteforce(g: Graph) -> Fraction:
    """Maximum of 2|E(S)|/|S| over every nonempty vertex subset."""
    n = g.n
    if n > BRUTEFORCE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTEFORCE_MAX_N}, got {n}")
    masks = [sum(1 << u for u in g.adj[v]) for v in range(n)]
    edges = [0] * (1 << n)
    best_e, best_k = 0, 1
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        e = edges[rest] + (masks[v] & rest).bit_count()
        edges[s] = e
        k = s.bit_count()
        if e * best_k > best_e * k:
            best_e, best_k = e, k
    return Fraction(2 * best_e, best_k)
