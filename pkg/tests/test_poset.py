import numpy as np

from orbitposet import Orbit, closure_leq, covers, maximal_below


def test_a1_poset_matrix_and_covers(make_poset):
    p = make_poset("A1")
    assert len(p) == 6
    # hand-checked relation: rows are "closure of a contains b"
    expected = np.array([
        [1, 0, 1, 0, 1, 1],
        [1, 1, 1, 1, 1, 1],
        [0, 0, 1, 0, 1, 0],
        [0, 0, 1, 1, 1, 1],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1, 1],
    ], dtype=np.uint8)
    assert np.array_equal(p.leq, expected)
    assert covers(p) == ((0, 1), (2, 0), (2, 3), (3, 1),
                         (4, 2), (4, 5), (5, 0), (5, 3))


def test_matrix_agrees_with_single_pair_criterion(make_poset):
    for t in ["A1", "A2"]:
        p = make_poset(t)
        for a in p.orbits:
            for b in p.orbits:
                assert p.closure_leq(a, b) == closure_leq(p.model, a, b)


def test_maximum_is_open_orbit(make_poset):
    for t in ["A1", "A2", "B2"]:
        p = make_poset(t)
        W = p.group
        assert p.maximum() == Orbit((), W.identity, W.long_element())
        m_idx = p.index[p.maximum()]
        assert p.matrix[m_idx].all()


def test_group_model_poset_is_opposite_bruhat_order(make_poset):
    p = make_poset("A2", kind="group")
    T = p.group.tables()
    for a in p.orbits:
        for b in p.orbits:
            assert p.closure_leq(a, b) == bool(
                T.bruhat[T.index[b.w], T.index[a.w]])


def test_covers_are_transitive_reduction(make_poset):
    p = make_poset("A2")
    L = p.matrix
    strict = L & ~np.eye(len(p), dtype=bool)
    cover_set = set(p.covers())
    for a in range(len(p)):
        for b in range(len(p)):
            if not strict[a, b]:
                assert (b, a) not in cover_set
                continue
            between = [c for c in range(len(p))
                       if c not in (a, b) and strict[a, c] and strict[c, b]]
            assert ((b, a) in cover_set) == (not between)


def test_intersection_components_self(make_poset):
    p = make_poset("A2")
    for o in p.orbits[::7]:
        assert p.intersection_components(o, o) == (o,)


def test_intersection_components_boundary_case(make_poset):
    # [K, e, w] is always among the components of
    # closure[{}, e, w] ^ closure[K, e, w0]
    p = make_poset("A2")
    W = p.group
    e, w0 = W.identity, W.long_element()
    for K in p.model.members:
        for w in W.enumerate_group():
            comps = p.intersection_components(Orbit((), e, w), Orbit(K, e, w0))
            assert Orbit(K, e, w) in comps


def test_maximal_below_predicate(make_poset):
    p = make_poset("A1")
    W = p.group
    # the whole boundary is the closure of [{1}, e, w0], so that orbit is
    # the unique maximum among the K={1} orbits
    sel = maximal_below(p, lambda o: o.K == (1,))
    assert sel == (Orbit((1,), W.identity, W.gens[0]),)
    # the two length-1 cells are the maximal orbits below the maximum
    below_top = maximal_below(p, lambda o: o != p.maximum())
    assert below_top == (Orbit((), W.identity, W.identity),
                         Orbit((1,), W.identity, W.gens[0]))
    everything = maximal_below(p, lambda o: True)
    assert everything == (p.maximum(),)


def test_orbit_index_formula(make_poset):
    p = make_poset("B2")
    for i, o in enumerate(p.orbits):
        assert p.orbit_index(o.K, o.v, o.w) == i


def test_poset_axioms_brute(make_poset):
    for t in ["A1", "A2"]:
        L = make_poset(t).matrix
        n = len(L)
        assert L.diagonal().all()
        assert not (L & L.T & ~np.eye(n, dtype=bool)).any()
        reach = (L.astype(np.int32) @ L.astype(np.int32)) > 0
        assert not (reach & ~L).any()


def test_dot_export_matches_golden(make_poset, request):
    golden = request.path.parent / "data" / "a1_wonderful.dot"
    assert make_poset("A1").to_dot() == golden.read_text()


def test_json_export_schema(make_poset):
    doc = make_poset("A1").to_json_dict()
    assert doc["schema_version"] == 1
    assert doc["orbit_count"] == 6
    assert doc["model"] == "wonderful"
    assert len(doc["covers"]) == 8
    assert doc["orbits"][0] == "[K={}; v=e; w=e]"
