"""(1_1,...,1_a,0_1,...,0_b)-colorings: verification, saturation, solvers.

A ``D`` class may induce maximum degree 1, an ``O`` class must be
independent. Internally the solvers encode classes as integers: ``0..a-1``
are D_1..D_a and ``a..a+b-1`` are O_1..O_b.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .graph import Graph, peel

DEFAULT_BUDGET = 10**7
BRUTEFORCE_LIMIT = 10**7


class ColorSpecError(ValueError):
    """A color class outside the spec in force, or an unusable spec."""


class ColorClass(NamedTuple):
    kind: str  # "D" or "O"
    index: int  # 1-based

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"

    @classmethod
    def parse(cls, label: str) -> "ColorClass":
        kind, digits = label[:1], label[1:]
        if kind not in ("D", "O") or not digits.isdigit() or int(digits) < 1:
            raise ColorSpecError(f"bad color class label {label!r}")
        return cls(kind, int(digits))


def D(j: int) -> ColorClass:
    return ColorClass("D", j)


def O(i: int) -> ColorClass:
    return ColorClass("O", i)


@dataclass(frozen=True)
class ColorSpec:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ColorSpecError("a and b must be nonnegative")

    @property
    def k(self) -> int:
        return self.a + self.b

    @property
    def bound(self) -> Fraction:
        """The mad threshold 4a/3 + b."""
        return Fraction(4 * self.a + 3 * self.b, 3)

    def classes(self) -> list[ColorClass]:
        return [D(j) for j in range(1, self.a + 1)] + [O(i) for i in range(1, self.b + 1)]

    def check(self, c: ColorClass) -> None:
        limit = self.a if c.kind == "D" else self.b
        if not 1 <= c.index <= limit:
            raise ColorSpecError(f"class {c} outside spec (a={self.a}, b={self.b})")

    def code(self, c: ColorClass) -> int:
        self.check(c)
        return c.index - 1 if c.kind == "D" else self.a + c.index - 1

    def decode(self, code: int) -> ColorClass:
        return D(code + 1) if code < self.a else O(code - self.a + 1)

    def require_solvable(self) -> None:
        if self.k < 1:
            raise ColorSpecError("need a + b >= 1")

    def require_theorem(self) -> None:
        if self.a < 1:
            raise ColorSpecError("need a >= 1")


class Coloring:
    """Partial or total map vertex -> ColorClass (``None`` = unassigned)."""

    __slots__ = ("assignment",)

    def __init__(self, assignment: Iterable[ColorClass | None]):
        self.assignment: list[ColorClass | None] = list(assignment)

    @classmethod
    def empty(cls, n: int) -> "Coloring":
        return cls([None] * n)

    @classmethod
    def from_classes(cls, n: int, classes: dict[str | ColorClass, Iterable[int]]) -> "Coloring":
        c = cls.empty(n)
        for label, members in classes.items():
            cc = label if isinstance(label, ColorClass) else ColorClass.parse(label)
            for v in members:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} out of range")
                if c.assignment[v] is not None:
                    raise ValueError(f"vertex {v} listed in two classes")
                c.assignment[v] = cc
        return c

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, v: int) -> ColorClass | None:
        return self.assignment[v]

    def __setitem__(self, v: int, c: ColorClass | None) -> None:
        self.assignment[v] = c

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Coloring) and self.assignment == other.assignment

    def __repr__(self) -> str:
        return f"Coloring({self.classes()})"

    def copy(self) -> "Coloring":
        return Coloring(self.assignment)

    def is_total(self) -> bool:
        return all(c is not None for c in self.assignment)

    def classes(self) -> dict[str, list[int]]:
        out: dict[str, list[int]] = {}
        for v, c in enumerate(self.assignment):
            if c is not None:
                out.setdefault(str(c), []).append(v)
        order = {"D": 0, "O": 1}
        return dict(sorted(out.items(), key=lambda kv: (order[kv[0][0]], int(kv[0][1:]))))

    def to_json(self, spec: ColorSpec) -> dict:
        classes = {str(c): [] for c in spec.classes()}
        classes.update(self.classes())
        return {"a": spec.a, "b": spec.b, "classes": classes}

    @classmethod
    def from_json(cls, data: dict, n: int) -> tuple["Coloring", ColorSpec]:
        spec = ColorSpec(int(data["a"]), int(data["b"]))
        c = cls.from_classes(n, data["classes"])
        return c, spec


class SaturationState(enum.Enum):
    UNASSIGNED = "unassigned"
    NOT_SATURATED = "not_saturated"
    ZERO_SATURATED = "zero_saturated"
    ONE_SATURATED = "one_saturated"


@dataclass(frozen=True)
class Violation:
    vertex: int
    color: ColorClass | None
    reason: str  # "unassigned", "independence" or "defect"
    neighbors: tuple[int, ...] = ()


def verify(g: Graph, spec: ColorSpec, c: Coloring, defect: int = 1, *, partial: bool = False) -> list[Violation]:
    """Violations of the coloring; an empty list means it is valid.

    With ``partial=True`` unassigned vertices are allowed and only the
    assigned support is checked.
    """
    if len(c) != g.n:
        raise ValueError("coloring length does not match the graph")
    for col in c.assignment:
        if col is not None:
            spec.check(col)
    out = []
    for v in range(g.n):
        col = c[v]
        if col is None:
            if not partial:
                out.append(Violation(v, None, "unassigned"))
            continue
        same = tuple(sorted(u for u in g.adj[v] if c[u] == col))
        if col.kind == "O" and same:
            out.append(Violation(v, col, "independence", same))
        elif col.kind == "D" and len(same) > defect:
            out.append(Violation(v, col, "defect", same))
    return out


def saturation(g: Graph, spec: ColorSpec, c: Coloring, v: int) -> SaturationState:
    col = c[v]
    if col is None:
        return SaturationState.UNASSIGNED
    spec.check(col)
    if col.kind == "O":
        return SaturationState.ZERO_SATURATED
    if any(c[u] == col for u in g.adj[v]):
        return SaturationState.ONE_SATURATED
    return SaturationState.NOT_SATURATED


def admissible_colors(g: Graph, spec: ColorSpec, c: Coloring, v: int) -> set[ColorClass]:
    """Classes that can be given to the unassigned vertex ``v`` (defect 1)."""
    if c[v] is not None:
        raise ValueError(f"vertex {v} is already assigned")
    holders: dict[ColorClass, list[int]] = {}
    for u in g.adj[v]:
        if c[u] is not None:
            holders.setdefault(c[u], []).append(u)
    out = set()
    for col in spec.classes():
        hs = holders.get(col, [])
        if not hs:
            out.add(col)
        elif col.kind == "D" and len(hs) == 1:
            if saturation(g, spec, c, hs[0]) is SaturationState.NOT_SATURATED:
                out.add(col)
    return out


def unique_colored_neighbors(g: Graph, c: Coloring, v: int) -> set[int]:
    """Assigned neighbors of ``v`` whose class occurs once in N(v)."""
    if c[v] is not None:
        raise ValueError(f"vertex {v} is already assigned")
    count: dict[ColorClass, int] = {}
    for u in g.adj[v]:
        if c[u] is not None:
            count[c[u]] = count.get(c[u], 0) + 1
    return {u for u in g.adj[v] if c[u] is not None and count[c[u]] == 1}


# -- solvers ----------------------------------------------------------------


class SolveStatus(enum.Enum):
    COLORED = "COLORED"
    UNSAT = "UNSAT"
    TIMEOUT = "TIMEOUT"


@dataclass
class SolveResult:
    status: SolveStatus
    coloring: Coloring | None = None
    nodes: int = 0

    @property
    def colored(self) -> bool:
        return self.status is SolveStatus.COLORED


class SearchState:
    """Mutable integer-coded coloring with incremental saturation counts.

    ``mates[v]`` is the number of neighbors sharing v's D class; with defect 1
    it is 0 or 1 and v is 1-saturated exactly when it is 1.
    """

    def __init__(self, g: Graph, spec: ColorSpec):
        self.g = g
        self.a = spec.a
        self.k = spec.k
        self.spec = spec
        self.adj = [tuple(sorted(s)) for s in g.adj]
        self.col = [-1] * g.n
        self.mates = [0] * g.n
        self.one_saturated = 0

    def assign(self, v: int, c: int) -> None:
        self.col[v] = c
        if c < self.a:
            col, mates = self.col, self.mates
            for u in self.adj[v]:
                if col[u] == c:
                    if mates[u] == 0:
                        self.one_saturated += 1
                    mates[u] += 1
                    mates[v] += 1
            if mates[v]:
                self.one_saturated += 1

    def unassign(self, v: int) -> int:
        c = self.col[v]
        if c < self.a:
            col, mates = self.col, self.mates
            if mates[v]:
                self.one_saturated -= 1
            for u in self.adj[v]:
                if col[u] == c:
                    mates[u] -= 1
                    if mates[u] == 0:
                        self.one_saturated -= 1
            mates[v] = 0
        self.col[v] = -1
        return c

    def admissible(self, v: int) -> list[int]:
        col, mates, a = self.col, self.mates, self.a
        count = [0] * self.k
        who = [-1] * self.k
        for u in self.adj[v]:
            c = col[u]
            if c >= 0:
                count[c] += 1
                who[c] = u
        return [c for c in range(self.k)
                if count[c] == 0 or (c < a and count[c] == 1 and mates[who[c]] == 0)]

    def has_admissible(self, v: int) -> bool:
        return bool(self.admissible(v))

    def unique_neighbors(self, v: int) -> list[int]:
        col = self.col
        count = [0] * self.k
        for u in self.adj[v]:
            if col[u] >= 0:
                count[col[u]] += 1
        return [u for u in self.adj[v] if col[u] >= 0 and count[col[u]] == 1]

    def is_saturated(self, u: int) -> bool:
        return self.col[u] >= self.a or self.mates[u] > 0

    def to_coloring(self) -> Coloring:
        return Coloring(None if c < 0 else self.spec.decode(c) for c in self.col)


class _Timeout(Exception):
    pass


def extend_peeled(state: SearchState, removal_order: Iterable[int]) -> None:
    """Color peeled vertices in reverse removal order.

    Each has fewer than a+b colored neighbors at its turn, so some class is
    missing around it and the assignment always succeeds.
    """
    for v in reversed(tuple(removal_order)):
        options = state.admissible(v)
        if not options:
            raise AssertionError(f"peeled vertex {v} has no admissible class")
        state.assign(v, options[0])


def solve_exact(g: Graph, spec: ColorSpec, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Complete backtracking search on the (a+b)-core, then greedy extension."""
    spec.require_solvable()
    a = spec.a
    pr = peel(g, spec.k)
    core = pr.core
    order = sorted(core, key=lambda v: (-len(g.adj[v] & core), v))
    state = SearchState(g, spec)
    adj = state.adj
    col = state.col
    nodes = 0

    def forward_ok(v: int) -> bool:
        # v's class can only block its own neighbors and its D-mate's neighbors
        touched = set(adj[v])
        c = col[v]
        if c < a:
            for u in adj[v]:
                if col[u] == c:
                    touched.update(adj[u])
        for w in touched:
            if col[w] < 0 and w in core and not state.has_admissible(w):
                return False
        return True

    def search(i: int, d_used: int, o_used: int) -> bool:
        nonlocal nodes
        if i == len(order):
            return True
        v = order[i]
        for c in state.admissible(v):
            # interchangeable classes: only the next unused index may open
            if c < a:
                if c > d_used:
                    continue
            elif c - a > o_used:
                continue
            nodes += 1
            if nodes > budget:
                raise _Timeout
            state.assign(v, c)
            if forward_ok(v) and search(i + 1, d_used + (c == d_used), o_used + (c - a == o_used)):
                return True
            state.unassign(v)
        return False

    try:
        found = search(0, 0, 0)
    except _Timeout:
        return SolveResult(SolveStatus.TIMEOUT, None, nodes)
    if not found:
        return SolveResult(SolveStatus.UNSAT, None, nodes)
    extend_peeled(state, pr.removal_order)
    return SolveResult(SolveStatus.COLORED, state.to_coloring(), nodes)


def solve_bruteforce(g: Graph, spec: ColorSpec) -> SolveResult:
    """Try every total assignment; test oracle only."""
    spec.require_solvable()
    k, a, n = spec.k, spec.a, g.n
    if k**n > BRUTEFORCE_LIMIT:
        raise ValueError(f"{k}^{n} assignments exceeds the brute-force limit")
    edges = g.edges()
    tried = 0
    for assignment in itertools.product(range(k), repeat=n):
        tried += 1
        same = [0] * n
        ok = True
        for u, v in edges:
            c = assignment[u]
            if c != assignment[v]:
                continue
            if c >= a:
                ok = False
                break
            same[u] += 1
            same[v] += 1
            if same[u] > 1 or same[v] > 1:
                ok = False
                break
        if ok:
            return SolveResult(SolveStatus.COLORED, Coloring(spec.decode(c) for c in assignment), tried)
    return SolveResult(SolveStatus.UNSAT, None, tried)
