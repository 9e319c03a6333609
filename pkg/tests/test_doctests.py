"""Keep the documentation examples honest."""

import doctest

import pytest

from orbitposet import coxeter, embedding, orbits, rootsys


@pytest.mark.parametrize("module", [rootsys, coxeter, embedding, orbits],
                         ids=lambda m: m.__name__)
def test_module_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
    assert result.attempted > 0
