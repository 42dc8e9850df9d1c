import doctest
import importlib

import pytest

MODULES = ["permutation_core", "reduced_words", "pattern_redwords", "elnitsky", "enumeration", "verify", "cli"]


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    module = importlib.import_module(f"redwords.{name}")
    result = doctest.testmod(module, optionflags=doctest.ELLIPSIS)
    assert result.attempted > 0
    assert result.failed == 0
