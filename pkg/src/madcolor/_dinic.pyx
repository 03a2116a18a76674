# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Dinic max-flow. Same contract as ``_dinic_py.dinic``.

Capacities are 64-bit; the caller routes larger instances to the Python
kernel.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

ctypedef long long i64


def dinic(int n, tails, heads, caps, int source, int sink):
    cdef Py_ssize_t k = len(tails)
    cdef Py_ssize_t narcs = 2 * k
    cdef int *to = <int *> malloc(max(narcs, 1) * sizeof(int))
    cdef i64 *res = <i64 *> malloc(max(narcs, 1) * sizeof(i64))
    cdef int *start = <int *> malloc((n + 1) * sizeof(int))
    cdef int *order = <int *> malloc(max(narcs, 1) * sizeof(int))
    cdef int *level = <int *> malloc(n * sizeof(int))
    cdef int *ptr = <int *> malloc(n * sizeof(int))
    cdef int *queue = <int *> malloc(n * sizeof(int))
    cdef int *stack = <int *> malloc((n + 1) * sizeof(int))
    cdef int *path = <int *> malloc((n + 1) * sizeof(int))
    cdef int *fill = <int *> malloc((n + 1) * sizeof(int))
    if not (to and res and start and order and level and ptr and queue and stack and path and fill):
        free(to); free(res); free(start); free(order); free(level)
        free(ptr); free(queue); free(stack); free(path); free(fill)
        raise MemoryError()

    cdef Py_ssize_t i
    cdef int u, v, e, head, tail, top, depth
    cdef i64 flow = 0, pushed, bottleneck
    try:
        memset(start, 0, (n + 1) * sizeof(int))
        for i in range(k):
            u = tails[i]
            v = heads[i]
            to[2 * i] = v
            res[2 * i] = caps[i]
            to[2 * i + 1] = u
            res[2 * i + 1] = 0
            start[u + 1] += 1
            start[v + 1] += 1
        for u in range(n):
            start[u + 1] += start[u]
        for u in range(n + 1):
            fill[u] = start[u]
        # CSR by tail, preserving arc insertion order like the Python kernel
        for i in range(k):
            u = to[2 * i + 1]
            order[fill[u]] = <int> (2 * i)
            fill[u] += 1
            v = to[2 * i]
            order[fill[v]] = <int> (2 * i + 1)
            fill[v] += 1

        while True:
            for u in range(n):
                level[u] = -1
            level[source] = 0
            head = 0
            tail = 0
            queue[tail] = source
            tail += 1
            while head < tail:
                u = queue[head]
                head += 1
                for i in range(start[u], start[u + 1]):
                    e = order[i]
                    if res[e] > 0 and level[to[e]] < 0:
                        level[to[e]] = level[u] + 1
                        queue[tail] = to[e]
                        tail += 1
            if level[sink] < 0:
                break
            for u in range(n):
                ptr[u] = start[u]
            while True:
                # single augmenting path, iterative DFS over the level graph
                pushed = 0
                top = 0
                depth = 0
                stack[0] = source
                while top >= 0:
                    u = stack[top]
                    if u == sink:
                        bottleneck = res[path[0]]
                        for i in range(1, depth):
                            if res[path[i]] < bottleneck:
                                bottleneck = res[path[i]]
                        for i in range(depth):
                            res[path[i]] -= bottleneck
                            res[path[i] ^ 1] += bottleneck
                        pushed = bottleneck
                        break
                    while ptr[u] < start[u + 1]:
                        e = order[ptr[u]]
                        v = to[e]
                        if res[e] > 0 and level[v] == level[u] + 1:
                            break
                        ptr[u] += 1
                    if ptr[u] < start[u + 1]:
                        top += 1
                        stack[top] = to[order[ptr[u]]]
                        path[depth] = order[ptr[u]]
                        depth += 1
                    else:
                        top -= 1
                        if depth > 0:
                            depth -= 1
                            ptr[to[path[depth] ^ 1]] += 1
                if pushed == 0:
                    break
                flow += pushed

        side = [False] * n
        for u in range(n):
            level[u] = 0
        level[source] = 1
        head = 0
        tail = 0
        queue[tail] = source
        tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            for i in range(start[u], start[u + 1]):
                e = order[i]
                if res[e] > 0 and level[to[e]] == 0:
                    level[to[e]] = 1
                    queue[tail] = to[e]
                    tail += 1
        for u in range(n):
            if level[u]:
                side[u] = True
        return flow, side
    finally:
        free(to); free(res); free(start); free(order); free(level)
        free(ptr); free(queue); free(stack); free(path); free(fill)
