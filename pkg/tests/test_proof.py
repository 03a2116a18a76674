import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from madcolor.coloring import (
    ColorSpec,
    ColorSpecError,
    Coloring,
    SolveStatus,
    solve_bruteforce,
    solve_exact,
    verify,
)
from madcolor.graph import Graph, complete, cycle, gen_below_bound, path, star
from madcolor.mad import mad
from madcolor.proof import (
    InvalidColoringError,
    audit,
    check_lemma2,
    closure,
    discharge,
    h_value,
    next_layer,
    solve_proof_guided,
)

from conftest import graphs, random_graph

S10, S11 = ColorSpec(1, 0), ColorSpec(1, 1)
SPECS = [(1, 0), (1, 1), (2, 0), (2, 1), (3, 0)]


def brute_next_layer(g, spec, F):
    """Largest H outside F meeting both conditions, by subset enumeration."""
    rest = [v for v in range(g.n) if v not in F]
    for r in range(len(rest), -1, -1):
        for H in itertools.combinations(rest, r):
            HF = set(H) | set(F)
            ok = True
            for v in H:
                h = g.degree(v) - spec.k
                if len(g.adj[v] & F) < max(spec.a - h, 0) or len(g.adj[v] & HF) < spec.k - h:
                    ok = False
                    break
            if ok:
                return frozenset(H)


def test_h_value():
    assert h_value(complete(4), S11, 2) == 1
    assert h_value(Graph.empty(1), S10, 0) == -1
    assert h_value(star(5), S10, 0) == 4


def test_next_layer_examples():
    assert next_layer(path(2), S10, frozenset()) == frozenset()
    assert next_layer(star(5), S10, frozenset({0})) == frozenset(range(1, 6))
    assert next_layer(cycle(6), S11, frozenset(range(6))) == frozenset()


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=9), st.sampled_from(SPECS), st.data())
def test_next_layer_is_maximum(g, ab, data):
    spec = ColorSpec(*ab)
    F = frozenset(data.draw(st.sets(st.integers(0, max(g.n - 1, 0)))) if g.n else set())
    assert next_layer(g, spec, F) == brute_next_layer(g, spec, F)


def test_closure_examples():
    L = closure(star(5), S10)
    assert L.layer == (0, 1, 1, 1, 1, 1) and L.covered
    L = closure(path(2), S10)
    assert L.layer == (None, None) and not L.covered
    L = closure(path(3), S10)
    assert L.layer == (1, 0, 1) and L.covered
    with pytest.raises(ColorSpecError):
        closure(path(3), ColorSpec(0, 2))


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=12), st.sampled_from(SPECS))
def test_layer_soundness(g, ab):
    spec = ColorSpec(*ab)
    L = closure(g, spec)
    for v in range(g.n):
        assert (L.layer[v] == 0) == (g.degree(v) >= 2 * spec.k)
    for v, k in enumerate(L.layer):
        if k is None or k == 0:
            continue
        F = L.F(k - 1)
        HF = L.F(k)
        h = g.degree(v) - spec.k
        assert len(g.adj[v] & F) >= max(spec.a - h, 0)
        assert len(g.adj[v] & HF) >= spec.k - h
    # maximality: one more round adds nothing
    assert next_layer(g, spec, L.F(L.depth)) == frozenset()


def test_discharge_star():
    rep = discharge(star(5), S10, closure(star(5), S10))
    c = rep.vertices[0]
    assert (c.mu, c.given, c.received, c.mu_star) == (Fraction(11, 3), Fraction(5, 3), 0, 2)
    for leaf in rep.vertices[1:]:
        assert (leaf.mu, leaf.received, leaf.mu_star) == (Fraction(-1, 3), Fraction(1, 3), 0)
    assert rep.sum_mu == rep.sum_mu_star == 2


def test_discharge_p3():
    rep = discharge(path(3), S10, closure(path(3), S10))
    mid = rep.vertices[1]
    assert (mid.mu, mid.given, mid.mu_star) == (Fraction(2, 3), Fraction(2, 3), 0)
    assert rep.vertices[0].mu_star == 0 and rep.vertices[2].mu_star == 0
    assert rep.sum_mu == rep.sum_mu_star == 0


def test_discharge_k4():
    rep = discharge(complete(4), S11, closure(complete(4), S11))
    assert all(x.given == 0 and x.received == 0 and x.mu_star == Fraction(2, 3) for x in rep.vertices)


def test_audit_examples():
    r = audit(star(5), S10)
    assert r.passed and r.covered and star(5).average_degree() == Fraction(5, 3)
    r = audit(path(2), S10)
    assert r.passed and not r.covered
    assert r.charges.sum_mu == r.charges.sum_mu_star
    r = audit(path(3), S10)
    assert r.passed and r.covered and r.charges.sum_mu == 0


def test_audit_json_schema():
    data = audit(star(5), S10).to_json()
    assert data["covered"] is True
    assert data["sum_mu"] == {"num": 2, "den": 1}
    assert set(data["vertices"][0]) == {"id", "degree", "h", "layer", "mu", "given", "received", "mu_star"}
    assert {c["name"] for c in data["checks"]} >= {"conservation", "covered_implies_density"}
    assert audit(path(2), S10).to_json()["vertices"][0]["layer"] == "uncovered"


def test_audit_random_300():
    rng = random.Random(31)
    for i in range(300):
        spec = ColorSpec(*SPECS[i % len(SPECS)])
        g = random_graph(rng, rng.randint(1, 16), rng.choice([0.1, 0.25, 0.4, 0.7]))
        r = audit(g, spec)
        assert r.passed, r.failed()
        if r.covered:
            assert g.average_degree() >= spec.bound
        if g.m and mad(g) < spec.bound:
            assert not r.covered


def test_lemma2_examples():
    g = complete(4)
    c = Coloring.from_classes(4, {"D1": [0, 1], "O1": [2]})
    rep = check_lemma2(g, S11, 3, c)
    assert not rep.extendable and rep.h == 1
    assert (rep.required_saturated, rep.unique_saturated_count) == (1, 1)
    assert (rep.required_one_saturated, rep.unique_one_saturated_count) == (0, 0)
    assert not rep.violation

    c = Coloring.from_classes(3, {"D1": [0], "O1": [1]})
    rep = check_lemma2(complete(3), S11, 2, c)
    assert rep.extendable and not rep.violation

    # h(v) >= a+b: requirements are <= 0
    c = Coloring.from_classes(5, {"O1": [1, 2, 3, 4]})
    rep = check_lemma2(star(4), S11, 0, c)
    assert rep.required_saturated <= 0 and not rep.violation


def test_lemma2_rejects_bad_input():
    c = Coloring.from_classes(3, {"O1": [0, 1]})
    with pytest.raises(InvalidColoringError):
        check_lemma2(complete(3), S11, 2, c)
    with pytest.raises(InvalidColoringError):
        check_lemma2(complete(3), S11, 2, Coloring.from_classes(3, {"O1": [0]}))


def test_lemma2_on_arbitrary_graphs():
    # the counting argument holds for any graph, not only minimal counterexamples
    rng = random.Random(8)
    blocked = 0
    for i in range(400):
        spec = ColorSpec(*SPECS[i % 4])
        g = random_graph(rng, rng.randint(3, 9), rng.choice([0.4, 0.6, 0.9]))
        v = rng.randrange(g.n)
        r = solve_exact(g.isolate(v), spec)
        if not r.colored:
            continue
        c = r.coloring
        c[v] = None
        rep = check_lemma2(g, spec, v, c)
        assert not rep.violation
        blocked += not rep.extendable
    assert blocked > 30


def test_proof_guided_examples():
    for seed in range(10):
        r = solve_proof_guided(cycle(5), S11, seed=seed)
        assert r.colored and verify(cycle(5), S11, r.coloring) == []
    r = solve_proof_guided(complete(4), S11)
    assert r.fell_back and r.status is SolveStatus.UNSAT
    r = solve_proof_guided(path(3), S10)
    assert r.fell_back and r.status is SolveStatus.UNSAT


def test_proof_guided_potential_and_oracle():
    rng = random.Random(4)
    swaps = 0
    for i in range(200):
        spec = ColorSpec(*SPECS[i % 3])
        g = random_graph(rng, rng.randint(1, 8), rng.choice([0.2, 0.4, 0.7]))
        r = solve_proof_guided(g, spec, seed=i)
        for before, after, was_one in r.potential:
            assert after <= before
            if was_one:
                assert after < before
        swaps += len(r.potential)
        oracle = solve_bruteforce(g, spec)
        assert r.status is oracle.status
        if r.colored:
            assert verify(g, spec, r.coloring) == []
        if not oracle.colored:
            assert r.fell_back
    assert swaps > 0


def test_proof_guided_zero_cap_falls_back():
    g = gen_below_bound(1, 1, 30, seed=5)
    r = solve_proof_guided(g, S11, swap_cap=0, seed=1)
    assert r.colored
    assert r.swaps == 0
