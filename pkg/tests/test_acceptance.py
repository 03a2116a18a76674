"""Exit criteria. Each test records one PASS/FAIL line in the summary."""

import random
import time
from fractions import Fraction
from functools import lru_cache

from madcolor.bounds import bound_dkmr, bound_ours, bounds_table
from madcolor.coloring import ColorSpec, SolveStatus, solve_exact, verify
from madcolor.graph import Graph, complete, cycle, gen_below_bound, path, star
from madcolor.mad import mad, mad_bruteforce
from madcolor.proof import PotentialViolation, audit, check_lemma2, solve_proof_guided

from conftest import random_graph

THEOREM_SPECS = [(1, 0), (1, 1), (2, 0)]
SHARP_SPECS = [(1, 0), (1, 1), (2, 0), (2, 1)]


@lru_cache(maxsize=None)
def oracle_graphs() -> tuple[Graph, ...]:
    rng = random.Random(20240601)
    out = [random_graph(rng, rng.randint(1, 12), rng.choice([0.1, 0.2, 0.3, 0.45, 0.6, 0.8, 1.0]))
           for _ in range(300)]
    out += [complete(n) for n in range(1, 9)]
    out += [cycle(n) for n in range(3, 13)]
    out += [path(n) for n in range(1, 13)]
    out += [star(k) for k in range(0, 12)]
    out.append(Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]))
    return tuple(out)


@lru_cache(maxsize=None)
def theorem_graphs(a: int, b: int) -> tuple[Graph, ...]:
    out = []
    for i in range(300):
        seed = 1000 * a + 100 * b + i
        n = random.Random(seed).randint(1, 40)
        out.append(gen_below_bound(a, b, n, seed=seed))
    return tuple(out)


def test_c1_mad_oracle_equivalence(report):
    t0 = time.perf_counter()
    graphs = oracle_graphs()
    mismatches = [g for g in graphs if mad(g) != mad_bruteforce(g)]
    elapsed = time.perf_counter() - t0
    ok = not mismatches and len(graphs) >= 300 and elapsed < 30
    report("C1 mad oracle equivalence", ok, f"{len(graphs)} graphs, {len(mismatches)} mismatches, {elapsed:.1f}s")
    assert ok


def test_c2_sharpness(report):
    t0 = time.perf_counter()
    bad = []
    for a, b in SHARP_SPECS:
        k = complete(2 * a + b + 1)
        if mad(k) != 2 * a + b or solve_exact(k, ColorSpec(a, b)).status is not SolveStatus.UNSAT:
            bad.append((a, b))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    report("C2 sharpness K_{2a+b+1}", ok, f"failures {bad}, {elapsed:.1f}s")
    assert ok


def test_c3_theorem_desk_check(report):
    t0 = time.perf_counter()
    failures = []
    fallbacks = 0
    for a, b in THEOREM_SPECS:
        spec = ColorSpec(a, b)
        for i, g in enumerate(theorem_graphs(a, b)):
            assert mad(g) < spec.bound
            r = solve_proof_guided(g, spec, seed=i)
            fallbacks += r.fell_back
            if not r.colored or verify(g, spec, r.coloring):
                failures.append((a, b, i))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 300
    report("C3 theorem desk check", ok,
           f"900 graphs, {len(failures)} failures, {fallbacks} fallbacks, {elapsed:.1f}s")
    assert ok


def test_c4_lemma2(report):
    t0 = time.perf_counter()
    found = violations = samples = 0
    per_spec = dict.fromkeys(THEOREM_SPECS, 0)
    seed = 0
    while found < 200 and samples < 20000:
        a, b = THEOREM_SPECS[seed % 3]
        spec = ColorSpec(a, b)
        rng = random.Random(seed)
        g = gen_below_bound(a, b, rng.randint(2, 40), seed=seed)
        v = rng.randrange(g.n)
        seed += 1
        r = solve_proof_guided(g.isolate(v), spec, seed=seed)
        if not r.colored:
            continue
        c = r.coloring
        c[v] = None
        samples += 1
        rep = check_lemma2(g, spec, v, c)
        if not rep.extendable:
            found += 1
            per_spec[a, b] += 1
            violations += rep.violation
    elapsed = time.perf_counter() - t0
    ok = found >= 200 and violations == 0 and elapsed < 120
    report("C4 Lemma 2 suite", ok,
           f"{found} blocked configs of {samples} samples {per_spec}, {violations} violations, {elapsed:.1f}s")
    assert ok


def _audit_all(g: Graph, spec: ColorSpec) -> list[str]:
    r = audit(g, spec)
    problems = [c.name for c in r.failed()]
    if r.charges.sum_mu != r.charges.sum_mu_star:
        problems.append("conservation")
    for x in r.charges.vertices:
        if x.layer is None:
            continue
        floor = Fraction(spec.b, 3) if x.layer == 0 else Fraction(max(x.h - spec.a, 0), 3)
        if x.mu_star < 0 or x.mu_star < floor:
            problems.append(f"vertex {x.id}")
    if r.covered and Fraction(2 * g.m, g.n) < spec.bound:
        problems.append("covered but sparse")
    if mad(g) < spec.bound and r.covered:
        problems.append("below bound yet covered")
    return problems


def test_c5_discharging_audit(report):
    t0 = time.perf_counter()
    cases = [(g, ColorSpec(a, b)) for g in oracle_graphs() for a, b in SHARP_SPECS]
    cases += [(complete(2 * a + b + 1), ColorSpec(a, b)) for a, b in SHARP_SPECS]
    cases += [(g, ColorSpec(a, b)) for a, b in THEOREM_SPECS for g in theorem_graphs(a, b)]
    bad = [(i, p) for i, (g, s) in enumerate(cases) if g.n and (p := _audit_all(g, s))]
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 120
    report("C5 discharging audit", ok, f"{len(cases)} audits, {len(bad)} failing, {elapsed:.1f}s")
    assert ok, bad[:5]


def test_c6_bounds_table(report):
    t0 = time.perf_counter()
    ok = bound_dkmr(1, 0, 1) == Fraction(4, 3) == bound_ours(1, 0)
    rows = bounds_table(10, 10)
    wrong = [(r.a, r.b) for r in rows if r.improved != (r.a > 1 or r.b > 0)]
    elapsed = time.perf_counter() - t0
    ok = ok and not wrong and len(rows) == 110 and elapsed < 1
    report("C6 bounds table", ok, f"{len(rows)} cells, {len(wrong)} mismatched flags, {elapsed:.3f}s")
    assert ok


def test_c7_proof_guided(report):
    t0 = time.perf_counter()
    failures = fallbacks = swaps = 0
    for i in range(200):
        a, b = THEOREM_SPECS[i % 3]
        spec = ColorSpec(a, b)
        seed = 50000 + i
        g = gen_below_bound(a, b, random.Random(seed).randint(1, 60), seed=seed)
        try:
            r = solve_proof_guided(g, spec, seed=seed)
        except PotentialViolation:
            failures += 1
            continue
        swaps += r.swaps
        fallbacks += r.fell_back
        if any(after > before for before, after, _ in r.potential):
            failures += 1
        if not r.colored or verify(g, spec, r.coloring):
            failures += 1
    elapsed = time.perf_counter() - t0
    ok = failures == 0 and elapsed < 300
    report("C7 proof-guided solver", ok,
           f"200 graphs, {swaps} swaps, fallback rate {fallbacks / 200:.3f}, {failures} failures, {elapsed:.1f}s")
    assert ok


def test_c8_boundary_witness(report):
    t0 = time.perf_counter()
    p3 = path(3)
    spec = ColorSpec(1, 0)
    ok = mad(p3) == Fraction(4, 3) == spec.bound
    ok = ok and solve_exact(p3, spec).status is SolveStatus.UNSAT
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 1
    report("C8 boundary witness P_3", ok, f"mad {mad(p3)}, {elapsed:.3f}s")
    assert ok
