"""Layer closure, discharging audit, saturated-neighbor counts, swap-chain solver.

Layers: layer 0 holds the vertices of degree >= 2(a+b); layer k+1 is the
largest set H outside F_k (the union of layers <= k) in which every v has
at least max(a - h(v), 0) neighbors in F_k and at least a + b - h(v)
neighbors in F_k ∪ H, with h(v) = d(v) - (a+b). Vertices never absorbed are
uncovered. Charges start at d(v) - (4a/3 + b) and every vertex pays 1/3 to
each neighbor lying in a strictly later layer (uncovered counts as last).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .coloring import (
    Coloring,
    ColorSpec,
    SaturationState,
    SearchState,
    SolveResult,
    SolveStatus,
    admissible_colors,
    saturation,
    solve_exact,
    unique_colored_neighbors,
    verify,
    DEFAULT_BUDGET,
)
from .graph import Graph, peel

THIRD = Fraction(1, 3)


class InvalidColoringError(ValueError):
    pass


class PotentialViolation(RuntimeError):
    """A swap increased the number of 1-saturated vertices."""


def h_value(g: Graph, spec: ColorSpec, v: int) -> int:
    return g.degree(v) - spec.k


def next_layer(g: Graph, spec: ColorSpec, F: frozenset[int] | set[int]) -> frozenset[int]:
    """Largest H outside F meeting both layer conditions, by peeling."""
    a, k = spec.a, spec.k
    F = frozenset(F)
    cand = set(range(g.n)) - F
    need_f = {}
    need_all = {}
    inside = {}
    for v in cand:
        h = g.degree(v) - k
        need_f[v] = max(a - h, 0)
        need_all[v] = k - h
        inside[v] = len(g.adj[v] & F) + len(g.adj[v] & cand)
    queue = sorted(v for v in cand if len(g.adj[v] & F) < need_f[v] or inside[v] < need_all[v])
    dead = set(queue)
    while queue:
        nxt = []
        for v in queue:
            cand.discard(v)
            for u in g.adj[v]:
                if u in cand and u not in dead:
                    inside[u] -= 1
                    if inside[u] < need_all[u]:
                        dead.add(u)
                        nxt.append(u)
        queue = sorted(nxt)
    return frozenset(cand)


@dataclass(frozen=True)
class LayerDecomposition:
    layer: tuple[int | None, ...]  # None = uncovered

    @property
    def covered(self) -> bool:
        return all(x is not None for x in self.layer)

    @property
    def depth(self) -> int:
        """Largest finite layer index, -1 if nothing is covered."""
        return max((x for x in self.layer if x is not None), default=-1)

    def F(self, k: int) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.layer) if x is not None and x <= k)

    def uncovered(self) -> list[int]:
        return [v for v, x in enumerate(self.layer) if x is None]

    def rank(self, v: int) -> float:
        x = self.layer[v]
        return math.inf if x is None else x


def closure(g: Graph, spec: ColorSpec) -> LayerDecomposition:
    spec.require_theorem()
    threshold = 2 * spec.k
    layer: list[int | None] = [0 if g.degree(v) >= threshold else None for v in range(g.n)]
    F = frozenset(v for v in range(g.n) if layer[v] == 0)
    k = 0
    while True:
        H = next_layer(g, spec, F)
        if not H:
            break
        k += 1
        for v in H:
            layer[v] = k
        F |= H
    return LayerDecomposition(tuple(layer))


# -- discharging ------------------------------------------------------------


def _rat(x: Fraction) -> dict[str, int]:
    return {"num": x.numerator, "den": x.denominator}


@dataclass(frozen=True)
class VertexCharge:
    id: int
    degree: int
    h: int
    layer: int | None
    mu: Fraction
    given: Fraction
    received: Fraction
    mu_star: Fraction

    def to_json(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "degree": self.degree,
            "h": self.h,
            "layer": "uncovered" if self.layer is None else self.layer,
            "mu": _rat(self.mu),
            "given": _rat(self.given),
            "received": _rat(self.received),
            "mu_star": _rat(self.mu_star),
        }


@dataclass(frozen=True)
class ChargeReport:
    vertices: tuple[VertexCharge, ...]
    sum_mu: Fraction
    sum_mu_star: Fraction


def discharge(g: Graph, spec: ColorSpec, layers: LayerDecomposition) -> ChargeReport:
    bound = spec.bound
    rows = []
    for v in range(g.n):
        r = layers.rank(v)
        lower = sum(1 for u in g.adj[v] if layers.rank(u) < r)
        higher = 0 if layers.layer[v] is None else sum(1 for u in g.adj[v] if layers.rank(u) > r)
        mu = g.degree(v) - bound
        given, received = higher * THIRD, lower * THIRD
        rows.append(VertexCharge(v, g.degree(v), g.degree(v) - spec.k, layers.layer[v],
                                 mu, given, received, mu - given + received))
    return ChargeReport(
        tuple(rows),
        sum((x.mu for x in rows), Fraction(0)),
        sum((x.mu_star for x in rows), Fraction(0)),
    )


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: Any = None

    def to_json(self) -> dict[str, Any]:
        w = self.witness
        if isinstance(w, Fraction):
            w = _rat(w)
        return {"name": self.name, "pass": self.passed, "witness": w}


@dataclass(frozen=True)
class AuditResult:
    spec: ColorSpec
    layers: LayerDecomposition
    charges: ChargeReport
    checks: tuple[Check, ...]

    @property
    def covered(self) -> bool:
        return self.layers.covered

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict[str, Any]:
        return {
            "a": self.spec.a,
            "b": self.spec.b,
            "vertices": [x.to_json() for x in self.charges.vertices],
            "covered": self.covered,
            "sum_mu": _rat(self.charges.sum_mu),
            "sum_mu_star": _rat(self.charges.sum_mu_star),
            "checks": [c.to_json() for c in self.checks],
        }


def audit(g: Graph, spec: ColorSpec) -> AuditResult:
    """Closure + discharging, with every inequality of the argument checked exactly."""
    spec.require_theorem()
    layers = closure(g, spec)
    rep = discharge(g, spec, layers)
    rows = rep.vertices
    checks = [Check("conservation", rep.sum_mu == rep.sum_mu_star,
                    {"sum_mu": _rat(rep.sum_mu), "sum_mu_star": _rat(rep.sum_mu_star)})]

    negative = [x.id for x in rows if x.layer is not None and x.mu_star < 0]
    checks.append(Check("covered_nonnegative", not negative, negative))

    floor0 = Fraction(spec.b, 3)
    low0 = [x.id for x in rows if x.layer == 0 and x.mu_star < floor0]
    checks.append(Check("layer0_lower_bound", not low0, low0))

    lowk = [x.id for x in rows
            if x.layer is not None and x.layer >= 1 and x.mu_star < Fraction(max(x.h - spec.a, 0), 3)]
    checks.append(Check("layer_k_lower_bound", not lowk, lowk))

    if layers.covered:
        checks.append(Check("covered_implies_density", rep.sum_mu >= 0, rep.sum_mu))
    else:
        checks.append(Check("covered_implies_density", True, "not covered"))
    return AuditResult(spec, layers, rep, tuple(checks))


# -- saturated neighbors of a blocked vertex ---------------------------------


@dataclass(frozen=True)
class Lemma2Report:
    v: int
    h: int
    extendable: bool
    unique_neighbors: frozenset[int]
    unique_saturated_count: int
    unique_one_saturated_count: int
    required_saturated: int
    required_one_saturated: int

    @property
    def violation(self) -> bool:
        if self.extendable or self.required_saturated <= 0:
            return False
        return (self.unique_saturated_count < self.required_saturated
                or self.unique_one_saturated_count < self.required_one_saturated)

    def to_json(self) -> dict[str, Any]:
        return {
            "v": self.v,
            "h": self.h,
            "extendable": self.extendable,
            "unique_neighbors": sorted(self.unique_neighbors),
            "unique_saturated_count": self.unique_saturated_count,
            "unique_one_saturated_count": self.unique_one_saturated_count,
            "required_saturated": self.required_saturated,
            "required_one_saturated": self.required_one_saturated,
            "violation": self.violation,
        }


def check_lemma2(g: Graph, spec: ColorSpec, v: int, c: Coloring) -> Lemma2Report:
    """Count saturated unique-colored neighbors of ``v`` under a coloring of G - v."""
    if c[v] is not None:
        raise InvalidColoringError(f"vertex {v} must be left uncolored")
    missing = [u for u in range(g.n) if u != v and c[u] is None]
    if missing:
        raise InvalidColoringError(f"vertices {missing[:5]} are uncolored")
    bad = verify(g, spec, c, partial=True)
    if bad:
        raise InvalidColoringError(f"coloring of G - {v} is invalid: {bad[:3]}")
    h = h_value(g, spec, v)
    S = frozenset(unique_colored_neighbors(g, c, v))
    states = [saturation(g, spec, c, u) for u in S]
    sat = sum(1 for s in states if s in (SaturationState.ZERO_SATURATED, SaturationState.ONE_SATURATED))
    one = sum(1 for s in states if s is SaturationState.ONE_SATURATED)
    return Lemma2Report(
        v=v,
        h=h,
        extendable=bool(admissible_colors(g, spec, c, v)),
        unique_neighbors=S,
        unique_saturated_count=sat,
        unique_one_saturated_count=one,
        required_saturated=spec.k - h,
        required_one_saturated=max(spec.a - h, 0),
    )


# -- swap-chain solver ------------------------------------------------------


@dataclass
class ProofGuidedResult:
    status: SolveStatus
    coloring: Coloring | None
    fell_back: bool
    swaps: int = 0
    fallback: SolveResult | None = None
    # (1-saturated count before, after, swapped-out vertex was 1-saturated)
    potential: list[tuple[int, int, bool]] = field(default_factory=list)

    @property
    def colored(self) -> bool:
        return self.status is SolveStatus.COLORED


def _prefer(options: list[int], a: int) -> int:
    o_classes = [c for c in options if c >= a]
    return min(o_classes) if o_classes else min(options)


def solve_proof_guided(
    g: Graph,
    spec: ColorSpec,
    swap_cap: int | None = None,
    seed: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> ProofGuidedResult:
    """Insert vertices one at a time, repairing blocked ones by swaps.

    A blocked vertex v takes the class of a saturated neighbor u whose class
    is unique around v; u is uncolored and becomes the next blocked vertex.
    Each swap must not raise the count of 1-saturated vertices. When no
    candidate exists or a chain exceeds ``swap_cap`` swaps, the instance is
    handed to :func:`solve_exact`.
    """
    spec.require_theorem()
    cap = 4 * g.n if swap_cap is None else swap_cap
    a = spec.a
    layers = closure(g, spec)
    pr = peel(g, spec.k)
    rng = random.Random(seed)
    core = sorted(pr.core)
    rng.shuffle(core)
    order = core + list(reversed(pr.removal_order))

    st = SearchState(g, spec)
    result = ProofGuidedResult(SolveStatus.COLORED, None, False)

    def fallback() -> ProofGuidedResult:
        exact = solve_exact(g, spec, budget)
        result.fell_back = True
        result.fallback = exact
        result.status = exact.status
        result.coloring = exact.coloring
        return result

    for v in order:
        chain = 0
        while True:
            options = st.admissible(v)
            if options:
                st.assign(v, _prefer(options, a))
                break
            cands = [u for u in st.unique_neighbors(v) if st.is_saturated(u)]
            if not cands or chain >= cap:
                return fallback()
            u = min(cands, key=lambda x: (st.mates[x] == 0, -layers.rank(x), x))
            before = st.one_saturated
            was_one = st.mates[u] > 0
            st.assign(v, st.unassign(u))
            after = st.one_saturated
            result.potential.append((before, after, was_one))
            if after > before or (was_one and after >= before):
                raise PotentialViolation(f"swap {v}<-{u}: 1-saturated count {before} -> {after}")
            chain += 1
            result.swaps += 1
            v = u

    result.coloring = st.to_coloring()
    if verify(g, spec, result.coloring):
        raise AssertionError("proof-guided solver produced an invalid coloring")
    return result
