import pytest

from srcartier.complexes import build_complex


@pytest.fixture
def whiskered_tetra():
    """Tetrahedron boundary plus two edges hanging off vertex 5."""
    return build_complex(
        [{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 5}, {2, 5}], 5)


@pytest.fixture
def path():
    return build_complex([{1, 2}, {2, 3}], 3)


@pytest.fixture
def vertex_and_edge():
    """Facets {1,3} and {2}: the smallest infinitely generated core."""
    return build_complex([{1, 3}, {2}], 3)


@pytest.fixture
def hollow_triangle():
    return build_complex([{1, 2}, {1, 3}, {2, 3}], 3)


@pytest.fixture
def solid_triangle():
    return build_complex([{1, 2, 3}], 3)


@pytest.fixture
def cone_over_hollow():
    return build_complex([{1, 2, 4}, {2, 3, 4}, {1, 3, 4}], 4)
