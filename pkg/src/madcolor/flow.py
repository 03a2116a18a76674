"""Integer max-flow front end with a compiled kernel and a Python fallback.

The compiled ``_dinic`` extension is used when it imports; setting
``MADCOLOR_PURE_PYTHON=1`` before import forces the Python kernel.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from . import _dinic_py

_INT64_SAFE = 1 << 62

if os.environ.get("MADCOLOR_PURE_PYTHON", "") not in ("", "0"):
    _compiled = None
else:
    try:
        from . import _dinic as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


@dataclass
class FlowNetwork:
    """Directed network with nonnegative integer arc capacities."""

    n_nodes: int
    source: int
    sink: int
    tails: list[int] = field(default_factory=list)
    heads: list[int] = field(default_factory=list)
    caps: list[int] = field(default_factory=list)

    def add_arc(self, u: int, v: int, cap: int) -> None:
        if cap < 0:
            raise ValueError("capacities must be nonnegative")
        self.tails.append(u)
        self.heads.append(v)
        self.caps.append(cap)


@dataclass(frozen=True)
class FlowResult:
    value: int
    source_side: frozenset[int]


def _kernel_for(net: FlowNetwork, backend: str | None):
    if backend == "python":
        return _dinic_py.dinic
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled flow kernel is not available")
        if sum(net.caps) >= _INT64_SAFE:
            raise OverflowError("capacities too large for the compiled kernel")
        return _compiled.dinic
    if backend is not None:
        raise ValueError(f"unknown backend {backend!r}")
    if _compiled is None:
        return _dinic_py.dinic
    # total flow is bounded by the sum of capacities; keep it inside int64
    if sum(net.caps) >= _INT64_SAFE:
        return _dinic_py.dinic
    return _compiled.dinic


def max_flow(net: FlowNetwork, backend: str | None = None) -> FlowResult:
    """Maximum flow value and the source side of a minimum cut."""
    if net.source == net.sink:
        raise ValueError("source and sink must differ")
    if not (0 <= net.source < net.n_nodes and 0 <= net.sink < net.n_nodes):
        raise ValueError("source or sink out of range")
    kernel = _kernel_for(net, backend)
    value, side = kernel(net.n_nodes, net.tails, net.heads, net.caps, net.source, net.sink)
    return FlowResult(value, frozenset(i for i, s in enumerate(side) if s))
