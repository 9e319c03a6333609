import pytest

from orbitposet import (CartanDatum, Orbit, OrbitValidationError,
                        SizeBoundError, closure_leq, closure_leq_bclosure,
                        divisorial_orbits, enumerate_orbits, format_orbit,
                        group_model, make_orbit, normalize_orbit, orbit_count,
                        parse_orbit)
from orbitposet.orbits import (closure_leq_bclosure_witness,
                               closure_leq_witness, group_for)


def test_make_orbit_validates_minimal_representative(make_wonderful):
    m = make_wonderful("A1")
    W = group_for(m)
    s1 = W.gens[0]
    o = make_orbit(m, (), W.identity, s1)
    assert o.K == () and o.w is s1
    with pytest.raises(OrbitValidationError) as exc:
        make_orbit(m, (), s1, W.identity)  # s1 is not in W^I
    assert "minimal representative" in str(exc.value)
    with pytest.raises(OrbitValidationError):
        make_orbit(m, (2,), W.identity, W.identity)  # K outside the family


def test_make_orbit_descent_condition(make_wonderful):
    # [K={1}, v=s1, w=e] in wonderful A2: s1 has right descent {1},
    # disjoint from I-p(K) = {2}, so it is a valid minimal representative
    m = make_wonderful("A2")
    W = group_for(m)
    s1, s2 = W.gens
    o = make_orbit(m, (1,), s1, W.identity)
    assert o.v is s1
    with pytest.raises(OrbitValidationError):
        make_orbit(m, (1,), s2, W.identity)  # s2 has right descent in {2}


def test_normalize_orbit_reports_discarded_part(make_wonderful):
    m = make_wonderful("A2")
    W = group_for(m)
    s1, s2 = W.gens
    orbit, rest = normalize_orbit(m, (1,), s2, W.identity)
    assert orbit.v is W.identity
    assert rest is s2
    orbit, rest = normalize_orbit(m, (1,), s1, W.identity)
    assert orbit.v is s1 and rest.is_identity()


@pytest.mark.parametrize("type_string,expected", [("A1", 6), ("A2", 78)])
def test_wonderful_orbit_counts(make_wonderful, type_string, expected):
    m = make_wonderful(type_string)
    orbits = enumerate_orbits(m)
    assert len(orbits) == expected
    assert orbit_count(m) == expected
    assert len(set(orbits)) == expected


def test_group_model_is_bruhat_decomposition():
    m = group_model(CartanDatum.from_type("A2"))
    orbits = enumerate_orbits(m)
    assert len(orbits) == 6
    assert all(o.K == () and o.v.is_identity() for o in orbits)


def test_enumeration_order_is_k_v_w(make_wonderful):
    m = make_wonderful("B2")
    W = group_for(m)
    orbits = enumerate_orbits(m)
    keys = [(o.K, o.v.shortlex_key(), o.w.shortlex_key()) for o in orbits]
    assert keys == sorted(keys)


def test_enumeration_size_bound(make_wonderful):
    with pytest.raises(SizeBoundError):
        enumerate_orbits(make_wonderful("A2"), max_orbits=10)


def test_closure_examples_a1(make_wonderful):
    m = make_wonderful("A1")
    W = group_for(m)
    e, s1 = W.identity, W.gens[0]
    big = Orbit((), e, s1)
    assert closure_leq(m, big, Orbit((1,), e, e))
    assert closure_leq_witness(m, big, Orbit((1,), e, e)) is e
    closed_cell = Orbit((), e, e)
    assert not closure_leq(m, closed_cell, big)
    assert closure_leq(m, closed_cell, closed_cell)


def test_closure_requires_k_containment(make_wonderful):
    m = make_wonderful("A2")
    W = group_for(m)
    e, w0 = W.identity, W.long_element()
    assert not closure_leq(m, Orbit((1,), e, w0), Orbit((), e, w0))
    assert not closure_leq_bclosure(m, Orbit((1,), e, w0), Orbit((), e, w0))


def test_bclosure_reflexive_with_identity_witnesses(make_wonderful):
    m = make_wonderful("A2")
    W = group_for(m)
    o = Orbit((1,), W.gens[0], W.long_element())
    u, up = closure_leq_bclosure_witness(m, o, o)
    assert u.is_identity() and up.is_identity()


def test_divisorial_orbits_a1(make_wonderful):
    m = make_wonderful("A1")
    W = group_for(m)
    boundary, schubert = divisorial_orbits(m)
    assert boundary == (Orbit((1,), W.identity, W.gens[0]),)
    # s1 w0 = e in A1
    assert schubert == (Orbit((), W.identity, W.identity),)


def test_divisorial_orbits_a2(make_wonderful):
    m = make_wonderful("A2")
    boundary, schubert = divisorial_orbits(m)
    assert len(boundary) == 2 and len(schubert) == 2
    assert all(len(o.K) == 1 for o in boundary)
    assert all(o.K == () for o in schubert)


def test_divisorial_orbits_group_model():
    m = group_model(CartanDatum.from_type("A2"))
    boundary, schubert = divisorial_orbits(m)
    assert boundary == ()
    assert len(schubert) == 2


def test_orbit_serialization_round_trip(make_wonderful):
    m = make_wonderful("B2")
    for o in enumerate_orbits(m):
        assert parse_orbit(m, format_orbit(o)) == o


def test_parse_orbit_short_form(make_wonderful):
    m = make_wonderful("A1")
    W = group_for(m)
    assert parse_orbit(m, "[{};e;1]") == Orbit((), W.identity, W.gens[0])
    assert parse_orbit(m, "[{1}; 1 ; e]") == Orbit((1,), W.gens[0], W.identity)
    # labeled form with spaces
    assert parse_orbit(m, "[K={1}; v=1; w=e]") == Orbit((1,), W.gens[0], W.identity)


def test_parse_orbit_rejects_malformed(make_wonderful):
    m = make_wonderful("A1")
    for bad in ["[{};e]", "{};e;1", "[K=1;v=e;w=e]", "[v=e; K={}; w=e]",
                "[{};x;e]", "[{2};e;e]"]:
        with pytest.raises(OrbitValidationError):
            parse_orbit(m, bad)
