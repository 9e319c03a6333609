import pytest

from orbitposet import CartanDatum, InvalidCartanError, NotFiniteTypeError
from orbitposet.rootsys import build_root_system, parse_cartan_spec

# number of positive roots per classical closed form:
# A_n: n(n+1)/2, B_n/C_n: n^2, D_n: n(n-1), G2: 6, F4: 24, E6/7/8: 36/63/120
POSITIVE_ROOT_COUNTS = {
    "A1": 1, "A2": 3, "A3": 6, "A4": 10,
    "B2": 4, "B3": 9, "B4": 16,
    "C3": 9, "D4": 12, "D5": 20,
    "G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120,
}


@pytest.mark.parametrize("type_string,expected",
                         sorted(POSITIVE_ROOT_COUNTS.items()))
def test_positive_root_counts(type_string, expected):
    rs = build_root_system(CartanDatum.from_type(type_string))
    assert rs.num_positive == expected
    assert len(rs.all_roots()) == 2 * expected


def test_a1_forced():
    rs = build_root_system(CartanDatum.from_matrix([[2]]))
    assert rs.positive_roots == ((1,),)


def test_rank_two_catalog_matrices():
    assert CartanDatum.from_type("A2").matrix == ((2, -1), (-1, 2))
    assert CartanDatum.from_type("B2").matrix == ((2, -1), (-2, 2))


def test_roots_are_positive_and_reflections_stay_roots():
    for t in ["A2", "B2", "B3", "G2"]:
        rs = build_root_system(CartanDatum.from_type(t))
        for r in rs.positive_roots:
            assert min(r) >= 0
            for i in rs.cartan.labels:
                assert rs.is_root(rs.reflect(i, r))


def test_simple_reflection_permutes_other_positive_roots():
    # s_i sends alpha_i to its negative and permutes the rest of R+
    for t in ["A2", "B2", "A3", "G2"]:
        rs = build_root_system(CartanDatum.from_type(t))
        for i in rs.cartan.labels:
            alpha_i = rs.simple_root(i)
            assert rs.reflect(i, alpha_i) == tuple(-x for x in alpha_i)
            others = [r for r in rs.positive_roots if r != alpha_i]
            images = {rs.reflect(i, r) for r in others}
            assert images == set(others)


def test_roots_sorted_lexicographically():
    rs = build_root_system(CartanDatum.from_type("B3"))
    assert list(rs.positive_roots) == sorted(rs.positive_roots)


def test_not_finite_type_raises():
    affine = [[2, -2], [-2, 2]]
    with pytest.raises(NotFiniteTypeError):
        build_root_system(CartanDatum.from_matrix(affine))


def test_invalid_matrices_rejected():
    with pytest.raises(InvalidCartanError):
        CartanDatum.from_matrix([[1]])  # diagonal must be 2
    with pytest.raises(InvalidCartanError):
        CartanDatum.from_matrix([[2, 1], [-1, 2]])  # positive off-diagonal
    with pytest.raises(InvalidCartanError):
        CartanDatum.from_matrix([[2, 0], [-1, 2]])  # zero asymmetry
    with pytest.raises(InvalidCartanError):
        CartanDatum.from_matrix([[2, -1], [-1, 2], [0, 0]])  # not square


def test_type_parsing_errors():
    with pytest.raises(InvalidCartanError):
        CartanDatum.from_type("H3")  # non-crystallographic
    with pytest.raises(InvalidCartanError):
        CartanDatum.from_type("Z9")
    with pytest.raises(InvalidCartanError):
        CartanDatum.from_type("E9")


def test_parse_cartan_spec_accepts_matrices():
    c = parse_cartan_spec("[[2,-1],[-2,2]]")
    assert c.matrix == CartanDatum.from_type("B2").matrix
    assert c.name is None
    assert parse_cartan_spec(" B3 ").name == "B3"
