"""Simple undirected graphs, text formats, generators and degree peeling."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Base class for malformed graph input."""


class MalformedLineError(GraphFormatError):
    pass


class VertexRangeError(GraphFormatError):
    pass


class SelfLoopError(GraphFormatError):
    pass


class DuplicateEdgeError(GraphFormatError):
    pass


class Graph6Error(GraphFormatError):
    pass


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Build one with :meth:`from_edges`; adjacency is stored as a tuple of
    frozensets so instances can be shared freely.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj: Sequence[frozenset[int]]):
        if len(adj) != n:
            raise ValueError("adjacency length does not match n")
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(adj)
        total = 0
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise SelfLoopError(f"self-loop at {v}")
            for u in nbrs:
                if not 0 <= u < n or v not in self.adj[u]:
                    raise ValueError(f"asymmetric or out-of-range adjacency {v}-{u}")
            total += len(nbrs)
        self.m = total // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], *, strict: bool = True) -> "Graph":
        if n < 0:
            raise ValueError("n must be nonnegative")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge {u} {v} out of range for n={n}")
            if u == v:
                raise SelfLoopError(f"self-loop at {u}")
            if v in sets[u]:
                if strict:
                    raise DuplicateEdgeError(f"duplicate edge {u} {v}")
                continue
            sets[u].add(v)
            sets[v].add(u)
        return cls(n, [frozenset(s) for s in sets])

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [frozenset()] * n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def average_degree(self) -> Fraction:
        return Fraction(2 * self.m, self.n) if self.n else Fraction(0)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled; returns it with the new-to-old id map."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(keep), edges), keep

    def edges_within(self, vertices: Iterable[int]) -> int:
        s = set(vertices)
        return sum(len(self.adj[v] & s) for v in s) // 2

    def without_edge(self, u: int, v: int) -> "Graph":
        if v not in self.adj[u]:
            raise KeyError(f"no edge {u} {v}")
        adj = list(self.adj)
        adj[u] = adj[u] - {v}
        adj[v] = adj[v] - {u}
        return Graph(self.n, adj)

    def isolate(self, v: int) -> "Graph":
        """Same vertex set with every edge at ``v`` removed (models G - v)."""
        adj = list(self.adj)
        for u in adj[v]:
            adj[u] = adj[u] - {v}
        adj[v] = frozenset()
        return Graph(self.n, adj)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- edge list --------------------------------------------------------------


def from_edge_list(text: str | bytes) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedLineError("missing 'n m' header")

    def ints(lineno: int, line: str) -> tuple[int, int]:
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLineError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLineError(f"line {lineno}: non-integer token in {line!r}") from None
        return x, y

    n, m = ints(1, lines[0])
    if n < 0 or m < 0:
        raise MalformedLineError("header values must be nonnegative")
    body = lines[1:]
    if len(body) != m:
        raise MalformedLineError(f"header announces {m} edges, found {len(body)}")
    edges = [ints(i + 2, line) for i, line in enumerate(body)]
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


# -- graph6 -----------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size(data: bytes) -> tuple[int, int]:
    """Decode the N(n) prefix; returns (n, offset of the bit field)."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated size field")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated size field")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, 4


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    data = text.strip()
    if data.startswith(_G6_HEADER.encode()):
        data = data[len(_G6_HEADER):]
    for c in data:
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid graph6 character {chr(c)!r}")
    n, off = _g6_size(data)
    field = data[off:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(field) != need:
        raise Graph6Error(f"bit field has {len(field)} bytes, expected {need} for n={n}")
    bits = []
    for c in field:
        x = c - 63
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(u, v) else 0 for v in range(1, n) for u in range(v)]
    bits.extend([0] * (-len(bits) % 6))
    body = [
        sum(b << (5 - i) for i, b in enumerate(bits[j:j + 6])) + 63
        for j in range(0, len(bits), 6)
    ]
    return bytes(head + body).decode("ascii")


def read_graph(path: str, fmt: str | None = None) -> Graph:
    """Load a graph file; format picked from the extension unless given."""
    if fmt is None:
        fmt = "graph6" if path.endswith((".g6", ".graph6")) else "edges"
    with open(path, "rb") as fh:
        data = fh.read()
    if fmt == "graph6":
        lines = [ln for ln in data.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise Graph6Error(f"expected one graph6 line, found {len(lines)}")
        return from_graph6(lines[0])
    if fmt == "edges":
        return from_edge_list(data)
    raise ValueError(f"unknown graph format {fmt!r}")


# -- generators -------------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    """K_{1,leaves}: center 0, leaves 1..leaves."""
    if leaves < 0:
        raise ValueError("leaf count must be nonnegative")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _pair(index: int) -> tuple[int, int]:
    # colex order: index k ↦ (u, v) with v(v-1)/2 + u = k, u < v
    v = (1 + math.isqrt(1 + 8 * index)) // 2
    u = index - v * (v - 1) // 2
    return u, v


def gnm(n: int, m: int, seed: int | None = None) -> Graph:
    """Uniform graph with exactly ``m`` edges on ``n`` vertices."""
    total = n * (n - 1) // 2
    if n < 0 or not 0 <= m <= total:
        raise ValueError(f"need 0 <= m <= {total} for n={n}")
    rng = random.Random(seed)
    return Graph.from_edges(n, [_pair(k) for k in rng.sample(range(total), m)])


_KINDS = {
    "complete": (complete, ("n",)),
    "cycle": (cycle, ("n",)),
    "path": (path, ("n",)),
    "star": (star, ("n",)),
    "gnm": (gnm, ("n", "m")),
}


def gen(kind: str, params: dict, seed: int | None = None) -> Graph:
    """Dispatch to a named generator. ``star`` takes its leaf count as ``n``."""
    try:
        fn, names = _KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown generator kind {kind!r}") from None
    missing = [k for k in names if k not in params]
    if missing:
        raise ValueError(f"{kind} needs parameters {missing}")
    args = [int(params[k]) for k in names]
    if kind == "gnm":
        return gnm(*args, seed=seed)
    return fn(*args)


def gen_below_bound(a: int, b: int, n: int, seed: int | None = None) -> Graph:
    """Random graph on ``n`` vertices with mad(G) < 4a/3 + b.

    Starts from a G(n, m) sample just under the target average degree, then
    repeatedly deletes a random edge of a densest subgraph until the exact
    mad drops below the bound.
    """
    from .mad import exceeds_or_reaches, densest_subgraph

    if a < 1 or b < 0 or n < 1:
        raise ValueError("need a >= 1, b >= 0, n >= 1")
    bound = Fraction(4 * a + 3 * b, 3)
    rng = random.Random(seed)
    m = math.ceil(bound * n / 2) - 1
    m = max(0, min(m, n * (n - 1) // 2))
    g = gnm(n, m, seed=rng.randrange(2**63))
    half = bound / 2
    while g.m and exceeds_or_reaches(g, half) is not None:
        best = densest_subgraph(g).subset
        inside = [(u, v) for u, v in g.edges() if u in best and v in best]
        u, v = rng.choice(inside)
        g = g.without_edge(u, v)
    return g


# -- peeling ----------------------------------------------------------------


@dataclass(frozen=True)
class PeelResult:
    removal_order: tuple[int, ...]
    core: frozenset[int]


def peel(g: Graph, t: int) -> PeelResult:
    """Strip vertices of degree < t until the t-core remains.

    Removal proceeds in rounds: every vertex failing at the start of a round
    is removed, smallest id first, and the next round looks at the survivors.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    deg = g.degrees()
    alive = [True] * g.n
    order: list[int] = []
    frontier = [v for v in range(g.n) if deg[v] < t]
    while frontier:
        for v in frontier:
            alive[v] = False
        for v in frontier:
            order.append(v)
            for u in g.adj[v]:
                deg[u] -= 1
        frontier = sorted({u for v in frontier for u in g.adj[v] if alive[u] and deg[u] < t})
    return PeelResult(tuple(order), frozenset(v for v in range(g.n) if alive[v]))
