import doctest
import importlib

import pytest

MODULES = [
    "arcdiag.perms",
    "arcdiag.arcs",
    "arcdiag.diagrams",
    "arcdiag.congruences",
    "arcdiag.counting",
    "arcdiag.textforms",
    "arcdiag.render",
]


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    module = importlib.import_module(name)
    result = doctest.testmod(module)
    assert result.attempted > 0, f"{name} lost its doctests"
    assert result.failed == 0
