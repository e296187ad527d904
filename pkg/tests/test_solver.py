from __future__ import annotations

import random

import pytest

import twodp.solver as solver_mod
from conftest import cube, diamond, graph, pendant5, random_connected, twisted_cube, wheel5
from twodp.graph import Graph, complete_graph, cycle_graph
from twodp.oracle import oracle_crossed, oracle_maximally_crossless
from twodp.solver import (
    Completion,
    Crossed,
    Crossing,
    Crossless,
    LiftError,
    PSides,
    SolveInputError,
    base_completion,
    base_crossing,
    check_crossing,
    compute_p_sides,
    crossing_problem,
    decide,
    lift_crossing,
    make_crossing,
    merge_completions,
    next_safe_edge,
    normalize_tuple,
    p_completion,
    solve,
    split,
    verify_outcome,
)
from twodp.web import WebCertificate, gen_web, verify_certificate

C4 = [0, 1, 2, 3]


def sides_of(flags: str) -> PSides:
    """PSides from a compact string: 'b' both, '1', '2', '-' neither."""
    s1 = tuple(f in "b1" for f in flags)
    s2 = tuple(f in "b2" for f in flags)
    none = (None,) * len(flags)
    return PSides(tuple(range(len(flags))), s1, s2, none, none)


class TestNormalize:
    def test_edgeless(self):
        h, c, added = normalize_tuple(Graph.empty(4), (0, 1, 2, 3))
        assert sorted(added) == [(0, 1), (0, 3), (1, 2), (2, 3)]
        assert h == cycle_graph(4)

    def test_cycle_present(self):
        _, _, added = normalize_tuple(cycle_graph(4), (0, 1, 2, 3))
        assert added == []

    @pytest.mark.parametrize("t", [(0, 1), (0, 1, 1, 2), (0, 1, 9)])
    def test_bad_tuples(self, t):
        with pytest.raises(SolveInputError):
            normalize_tuple(complete_graph(4), t)

    def test_crossedness_unchanged(self, rng):
        for _ in range(200):
            n = rng.randint(4, 10)
            g = random_connected(rng, n, rng.randint(n - 1, 2 * n))
            t = rng.sample(range(n), rng.randint(3, min(6, n)))
            h, _, _ = normalize_tuple(g, t)
            assert (oracle_crossed(g, t) is None) == (oracle_crossed(h, t) is None)


class TestSolveExamples:
    def test_k4(self):
        outcome, stats = solve(complete_graph(4), (0, 1, 2, 3))
        assert outcome == Crossed(Crossing((0, 2), (1, 3), (1, 2, 3, 4)))
        assert stats.recursive_calls == 1

    def test_four_cycle(self):
        outcome, _ = solve(cycle_graph(4), (0, 1, 2, 3))
        assert isinstance(outcome, Crossless)
        assert outcome.cert.added_edges == {(0, 2)}
        assert outcome.cert.clique_assignment == {}
        assert verify_certificate(cycle_graph(4), outcome.cert)

    def test_twisted_cube(self):
        outcome, _ = solve(twisted_cube(), (0, 1, 2, 3))
        assert outcome == Crossed(Crossing((0, 4, 6, 2), (1, 5, 7, 3), (1, 2, 3, 4)))

    def test_cube_is_crossless(self):
        outcome, _ = solve(cube(), (0, 1, 2, 3))
        assert isinstance(outcome, Crossless)
        assert verify_outcome(cube(), (0, 1, 2, 3), outcome)

    def test_triangle_tuple_gives_a_clique(self):
        g = graph(6, [(0, 1), (3, 4), (4, 5)])
        outcome, _ = solve(g, (2, 0, 1))
        assert isinstance(outcome, Crossless)
        assert set(outcome.cert.clique_assignment) == {3, 4, 5}
        assert verify_outcome(g, (2, 0, 1), outcome)

    def test_disconnected_strays_become_clique_vertices(self):
        g = graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (5, 6)])
        outcome, _ = solve(g, (0, 1, 2, 3))
        assert isinstance(outcome, Crossless)
        assert {4, 5, 6} <= set(outcome.cert.clique_assignment)
        assert verify_outcome(g, (0, 1, 2, 3), outcome)

    def test_decide_matches_solve(self, rng):
        for _ in range(300):
            n = rng.randint(4, 11)
            g = random_connected(rng, n, rng.randint(n - 1, 2 * n))
            t = rng.sample(range(n), rng.randint(3, min(6, n)))
            assert decide(g, t) == isinstance(solve(g, t)[0], Crossed)


class TestPSides:
    def test_chord_ends_on_both_sides(self):
        s = compute_p_sides(cycle_graph(4).with_edges([(0, 2)]), C4, [0, 2])
        assert s.side1 == (True, True) and s.side2 == (True, True)

    def test_pendant_vertex_on_no_side(self):
        s = compute_p_sides(pendant5(), C4, [0, 4, 2])
        assert s.side1 == (True, False, True)
        assert s.side2 == (True, False, True)

    def test_twisted_cube_both_sides_with_witnesses(self):
        s = compute_p_sides(twisted_cube(), C4, [0, 4, 6, 2])
        assert s.all_both()
        assert s.witness(4, 1) == (4, 7, 5, 1) and s.witness(4, 2) == (4, 7, 3)
        assert s.witness(6, 1) == (6, 5, 1) and s.witness(6, 2) == (6, 5, 7, 3)

    def test_witnesses_validate(self, rng):
        for _ in range(100):
            n = rng.randint(5, 12)
            g, c = _framed(rng, n)
            from twodp.graph import find_c_path

            p = find_c_path(g, c)
            if p is None:
                continue
            s = compute_p_sides(g, c, p)
            inner1 = set(solver_mod.arcs(c, p[0], p[-1])[0][1:-1])
            inner2 = set(solver_mod.arcs(c, p[0], p[-1])[1][1:-1])
            blocked = set(c) | set(p)
            for k, y in enumerate(p):
                for wit, inner in ((s.witness1[k], inner1), (s.witness2[k], inner2)):
                    if wit is None:
                        continue
                    assert wit[0] == y and wit[-1] in inner
                    assert not blocked & set(wit[1:-1])
                    assert all(g.has_edge(a, b) for a, b in zip(wit, wit[1:]))


def _framed(rng: random.Random, n: int) -> tuple[Graph, list[int]]:
    g = random_connected(rng, n, rng.randint(n - 1, 2 * n))
    t = rng.sample(range(n), rng.randint(4, min(6, n)))
    h, c, _ = normalize_tuple(g, t)
    return h, c


class TestNextSafeEdge:
    def test_pendant_example(self):
        s = compute_p_sides(pendant5(), C4, [0, 4, 2])
        assert next_safe_edge(s) == (0, 2)

    def test_one_then_two(self):
        assert next_safe_edge(sides_of("bb12-b")) == (1, 3)

    def test_r_equals_s_when_both(self):
        assert next_safe_edge(sides_of("b--bb")) == (0, 3)

    def test_needs_missing_side(self):
        assert next_safe_edge(sides_of("b1-1-2b")) == (0, 5)

    def test_precondition(self):
        with pytest.raises(LiftError):
            next_safe_edge(sides_of("bbb"))


class TestPCompletion:
    def test_already_complete(self):
        g = cycle_graph(4).with_edges([(0, 2)])
        done = p_completion(g, C4, [0, 2])
        assert (done.graph, done.path, done.added) == (g, [0, 2], [])

    def test_pendant_example(self):
        done = p_completion(pendant5(), C4, [0, 4, 2])
        assert done.added == [(0, 2)]
        assert done.path == [0, 2]
        assert done.sides.all_both()

    def test_safety_edge_by_edge(self, rng):
        checked = 0
        for _ in range(200):
            n = rng.randint(5, 10)
            g = random_connected(rng, n, rng.randint(n - 1, n + 4))
            t = rng.sample(range(n), rng.randint(4, min(6, n)))
            seen = []
            solve(g, t, on_edge=lambda h, c, e: seen.append((h, list(c), e)))
            for h, c, e in seen:
                before = oracle_crossed(h, c) is None
                assert before == (oracle_crossed(h.with_edges([e]), c) is None)
                checked += 1
        assert checked > 20


class TestSplit:
    def test_diamond_chord(self):
        one, two = split(diamond(), C4, [0, 2])
        assert (one.labels, one.frame) == ([0, 1, 2], [0, 1, 2])
        assert (two.labels, two.frame) == ([0, 2, 3], [0, 1, 2])
        assert one.graph.m == two.graph.m == 3

    def test_sideless_piece_goes_to_first_side(self):
        done = p_completion(pendant5(), C4, [0, 4, 2])
        one, two = split(done.graph, C4, done.path)
        assert one.labels == [0, 1, 2, 4]
        assert two.labels == [0, 2, 3]

    def test_cube(self):
        done = p_completion(cube(), C4, [0, 4, 5, 6, 2])
        assert done.path == [0, 5, 2] and done.added == [(0, 5), (2, 5)]
        one, two = split(done.graph, C4, done.path)
        assert one.labels == [0, 1, 2, 5]
        assert two.labels == [0, 2, 3, 4, 5, 6, 7]

    def test_chords_only_on_first_side(self):
        g = graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 2), (0, 5), (4, 1), (5, 1), (4, 3), (5, 3)])
        one, two = split(g, C4, [0, 4, 5, 2])
        local = {v: i for i, v in enumerate(one.labels)}
        assert one.graph.has_edge(local[0], local[5])
        local2 = {v: i for i, v in enumerate(two.labels)}
        assert not two.graph.has_edge(local2[0], local2[5])


class TestBaseCrossing:
    def test_k4(self):
        assert base_crossing(complete_graph(4), C4, [0, 2]) == [1, 3]

    def test_twisted_cube(self):
        assert base_crossing(twisted_cube(), C4, [0, 4, 6, 2]) == [1, 5, 7, 3]

    def test_wheel_is_separated(self):
        assert base_crossing(wheel5(), [0, 1, 2, 3, 4], [0, 5, 2]) is None


# frame 0-1-2-3, path P = 0-4-5-6-2; vertex 9 gives every P vertex side 2
_LIFT_BASE = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 2), (4, 7), (7, 6), (9, 4), (9, 5), (9, 6), (9, 3)]
_LIFT_P = [0, 4, 5, 6, 2]


class TestLift:
    def test_one_anchor_each(self):
        # child frame 0-1-2-5-4; both child paths end on P once
        g = graph(10, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 2), (1, 7), (7, 5), (2, 8), (8, 4), (9, 4), (9, 5), (9, 3)])
        a, b = lift_crossing(g, C4, [0, 4, 5, 2], 1, ([1, 7, 5], [2, 8, 4]))
        assert (a, b) == ([1, 7, 5, 9, 3], [0, 4, 8, 2])
        assert crossing_problem(g, C4, a, b)

    def test_case_four(self):
        g = graph(10, _LIFT_BASE + [(1, 8), (8, 5), (1, 4), (1, 6)])
        a, b = lift_crossing(g, C4, _LIFT_P, 1, ([4, 7, 6], [1, 8, 5]))
        assert (a, b) == ([1, 8, 5, 9, 3], [0, 4, 7, 6, 2])
        assert crossing_problem(g, C4, a, b)
        assert oracle_crossed(g, C4) is not None

    def test_case_five(self):
        g = graph(10, _LIFT_BASE + [(5, 8), (8, 2), (7, 1), (4, 1), (5, 1), (6, 1)])
        a, b = lift_crossing(g, C4, _LIFT_P, 1, ([4, 7, 6], [5, 8, 2]))
        assert (a, b) == ([1, 7, 6, 9, 3], [0, 4, 5, 8, 2])
        assert crossing_problem(g, C4, a, b)

    def test_tripwire(self):
        g = graph(10, _LIFT_BASE)
        with pytest.raises(LiftError):
            lift_crossing(g, C4, _LIFT_P, 1, ([4, 7, 6], [5, 9, 3]))


class TestBaseCompletion:
    def test_four_cycle(self):
        done = base_completion(cycle_graph(4), C4)
        assert [sorted(f) for f in done.faces] == [[0, 1, 2], [0, 2, 3]]
        assert done.cliques == {}

    def test_pendant_on_five_cycle(self):
        g = graph(6, [(i, (i + 1) % 5) for i in range(5)] + [(5, 2)])
        outcome, _ = solve(g, (0, 1, 2, 3, 4))
        cert = outcome.cert
        assert {(0, 2), (0, 3)} <= cert.added_edges
        assert cert.clique_assignment == {5: (0, 1, 2)}
        assert sorted(set(cert.completion_edges(g)) - cert.added_edges) == [(0, 5), (1, 5)]
        assert verify_certificate(g, cert)

    def test_triangle_with_hanging_piece(self):
        g = graph(5, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 4)])
        done = base_completion(g, [0, 1, 2])
        assert done.cliques == {3: (0, 1, 2), 4: (0, 1, 2)}
        outcome, _ = solve(g, (0, 1, 2))
        assert verify_outcome(g, (0, 1, 2), outcome)
        assert oracle_maximally_crossless(g.with_edges(outcome.cert.completion_edges(g)), (0, 1, 2))


class TestMerge:
    TRI = {0: (1, 2), 1: (0, 2), 2: (0, 1)}

    def test_two_triangles_make_a_diamond(self):
        one = WebCertificate((0, 1, 2), self.TRI)
        two = WebCertificate((0, 2, 3), {0: (2, 3), 2: (0, 3), 3: (0, 2)})
        merged = merge_completions(one, two, [0, 2])
        assert sorted(merged.frame) == [0, 1, 2, 3]
        assert verify_certificate(diamond(), merged)

    def test_pendant_example(self):
        one = WebCertificate((0, 1, 2), self.TRI, {4: (0, 1, 2)})
        two = WebCertificate((0, 2, 3), {0: (2, 3), 2: (0, 3), 3: (0, 2)})
        merged = merge_completions(one, two, [0, 2])
        assert merged.clique_assignment == {4: (0, 1, 2)}
        assert verify_certificate(pendant5().with_edges([(0, 2), (1, 4)]), merged)

    def test_chord_is_rejected(self):
        done = Completion([0, 1, 2, 3], [[0, 2, 1], [0, 3, 2]], {})
        with pytest.raises(LiftError):
            solver_mod.merge_parts(done, Completion([0, 3, 2, 4], [[0, 2, 3], [0, 4, 2]], {}), [0, 3, 2])

    def test_web_round_trip(self):
        for seed in range(60):
            w = gen_web(seed, 1 + seed % 7, 2)
            outcome, _ = solve(w.graph, w.frame)
            assert isinstance(outcome, Crossless)
            assert outcome.cert.completion_edges(w.graph) == []
            assert verify_certificate(w.graph, outcome.cert)


class TestCrossingChecks:
    def test_canonical_form(self):
        c = make_crossing((5, 6, 7, 8), [7, 9, 5], [8, 6])
        assert c == Crossing((5, 9, 7), (6, 8), (1, 2, 3, 4))

    def test_reported_indices_checked(self):
        g = complete_graph(4)
        assert check_crossing(g, C4, Crossing((0, 2), (1, 3), (1, 2, 3, 4)))
        assert check_crossing(g, C4, Crossing((0, 2), (1, 3), (1, 2, 4, 3))).clause == "ENDPOINTS"
        assert check_crossing(g, C4, Crossing((0, 2), (0, 3), (1, 1, 3, 4))).clause == "DISJOINTNESS"
        assert check_crossing(g, C4, Crossing((0, 1), (2, 3), (1, 2, 3, 4))).clause == "INTERLEAVING"


class TestProperties:
    def test_dichotomy_and_bounds(self, rng):
        for _ in range(400):
            n = rng.randint(4, 12)
            g = random_connected(rng, n, rng.randint(n - 1, 2 * n + 2))
            t = rng.sample(range(n), rng.randint(3, min(6, n)))
            outcome, stats = solve(g, t)
            assert verify_outcome(g, t, outcome)
            assert (oracle_crossed(g, t) is not None) == isinstance(outcome, Crossed)
            assert 1 <= stats.recursive_calls <= 3 * n
            assert stats.repairs == 0
            if isinstance(outcome, Crossless):
                assert not outcome.cert.added_edges & set(g.edges())

    def test_children_shrink(self, rng, monkeypatch):
        real = solver_mod.split

        def checked(g, c, p):
            one, two = real(g, c, p)
            assert one.graph.n < g.n and two.graph.n < g.n
            return one, two

        monkeypatch.setattr(solver_mod, "split", checked)
        for _ in range(200):
            w = gen_web(rng.randrange(10**6), rng.randint(1, 8), 2)
            solve(w.graph.without_edges(w.graph.edges()[:2]), w.frame)

    @pytest.mark.slow
    def test_completions_are_maximal(self, rng):
        checked = 0
        for _ in range(150):
            n = rng.randint(4, 8)
            g = random_connected(rng, n, rng.randint(n - 1, n + 3))
            t = rng.sample(range(n), rng.randint(3, min(5, n)))
            outcome, _ = solve(g, t)
            if isinstance(outcome, Crossless):
                full = g.with_edges(outcome.cert.completion_edges(g))
                assert oracle_maximally_crossless(full, t)
                checked += 1
        assert checked > 20
