import pytest

from orbitposet import (CartanDatum, build_poset, group_model, weyl_group,
                        wonderful_model)


@pytest.fixture(scope="session")
def make_group():
    def _make(type_string):
        return weyl_group(CartanDatum.from_type(type_string))
    return _make


@pytest.fixture(scope="session")
def make_wonderful():
    cache = {}

    def _make(type_string):
        if type_string not in cache:
            cache[type_string] = wonderful_model(
                CartanDatum.from_type(type_string))
        return cache[type_string]
    return _make


@pytest.fixture(scope="session")
def make_poset(make_wonderful):
    cache = {}

    def _make(type_string, kind="wonderful"):
        key = (type_string, kind)
        if key not in cache:
            if kind == "wonderful":
                model = make_wonderful(type_string)
            else:
                model = group_model(CartanDatum.from_type(type_string))
            cache[key] = build_poset(model)
        return cache[key]
    return _make
