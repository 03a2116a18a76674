"""Pure-Python Dinic max-flow; the reference kernel and the import fallback."""

from collections import deque


def dinic(n, tails, heads, caps, source, sink):
    """Max ``source``-``sink`` flow on the arc lists.

    Returns ``(value, side)`` where ``side`` is a list of booleans marking
    the nodes reachable from ``source`` in the final residual network.
    """
    k = len(tails)
    # arc 2i is forward, 2i+1 its residual twin
    to = [0] * (2 * k)
    res = [0] * (2 * k)
    first = [[] for _ in range(n)]
    for i in range(k):
        u, v, c = tails[i], heads[i], caps[i]
        to[2 * i] = v
        res[2 * i] = c
        to[2 * i + 1] = u
        first[u].append(2 * i)
        first[v].append(2 * i + 1)

    flow = 0
    while True:
        level = [-1] * n
        level[source] = 0
        q = deque([source])
        while q:
            u = q.popleft()
            for e in first[u]:
                if res[e] > 0 and level[to[e]] < 0:
                    level[to[e]] = level[u] + 1
                    q.append(to[e])
        if level[sink] < 0:
            break
        ptr = [0] * n
        while True:
            pushed = _augment(source, sink, level, ptr, first, to, res)
            if not pushed:
                break
            flow += pushed

    side = [False] * n
    side[source] = True
    q = deque([source])
    while q:
        u = q.popleft()
        for e in first[u]:
            if res[e] > 0 and not side[to[e]]:
                side[to[e]] = True
                q.append(to[e])
    return flow, side


def _augment(source, sink, level, ptr, first, to, res):
    # one augmenting path in the level graph; iterative DFS with current-arc pointers
    stack = [source]
    path = []
    while stack:
        u = stack[-1]
        if u == sink:
            bottleneck = min(res[e] for e in path)
            for e in path:
                res[e] -= bottleneck
                res[e ^ 1] += bottleneck
            return bottleneck
        arcs = first[u]
        advanced = False
        while ptr[u] < len(arcs):
            e = arcs[ptr[u]]
            v = to[e]
            if res[e] > 0 and level[v] == level[u] + 1:
                stack.append(v)
                path.append(e)
                advanced = True
                break
            ptr[u] += 1
        if not advanced:
            stack.pop()
            if path:
                e = path.pop()
                ptr[to[e ^ 1]] += 1
    return 0
