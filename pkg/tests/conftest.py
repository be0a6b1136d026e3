import pytest

from arcdiag import all_permutations, diagram_from_permutation


@pytest.fixture(scope="session")
def delta_image():
    """n -> {permutation: its diagram}, computed once per session."""
    cache = {}

    def at(n):
        if n not in cache:
            cache[n] = {x: diagram_from_permutation(x) for x in all_permutations(n)}
        return cache[n]

    return at
