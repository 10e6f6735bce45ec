import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planecolor import generators as G
from planecolor.codec import write_planar_code
from planecolor.errors import BadParams


PLATONIC_COUNTS = {
    "tetrahedron": (4, 6, 4, 3, 3),
    "cube": (8, 12, 6, 3, 4),
    "octahedron": (6, 12, 8, 4, 3),
    "dodecahedron": (20, 30, 12, 3, 5),
    "icosahedron": (12, 30, 20, 5, 3),
}


@pytest.mark.parametrize("name", sorted(PLATONIC_COUNTS))
def test_platonic_counts(name):
    v, e, f, deg, fdeg = PLATONIC_COUNTS[name]
    g = G.platonic(name)
    assert (g.vertex_count, g.edge_count, g.face_count()) == (v, e, f)
    assert all(g.degree(u) == deg for u in g.vertices())
    assert all(face.degree == fdeg for face in g.faces())
    assert g.euler_characteristic() == 2


def test_platonic_unknown():
    with pytest.raises(BadParams):
        G.platonic("teapot")


def test_square_grid_counts():
    g = G.square_grid(3, 4)
    assert g.vertex_count == 12
    assert g.edge_count == 3 * 3 + 4 * 2
    assert g.face_count() == 2 * 3 + 1
    assert g.euler_characteristic() == 2


def test_tri_grid_interior_six_vertex():
    g = G.tri_grid(4, 4)
    interior = 1 * 4 + 1  # row 1, col 1
    st_ = g.vertex_stats(interior)
    assert st_.degree == 6 and st_.m3 == 6
    assert g.max_degree() == 6


def test_hex_grid_single_ring_is_hexagon():
    g = G.hex_grid(1)
    assert g.vertex_count == 6
    assert sorted(f.degree for f in g.faces()) == [6, 6]


def test_hex_grid_two_rings():
    g = G.hex_grid(2)
    assert g.vertex_count == 24
    inner = [f for f in g.faces() if f.degree == 6]
    assert len(inner) == 7
    assert g.max_degree() == 3


def test_cycle_two_faces():
    g = G.cycle(5)
    assert [f.degree for f in g.faces()] == [5, 5]


def test_path_single_face():
    g = G.path(5)
    assert g.face_count() == 1
    assert g.faces()[0].degree == 8


def test_generate_dispatch():
    g = G.generate(G.GeneratorSpec("cycle", {"n": 7}))
    assert g.vertex_count == 7
    with pytest.raises(BadParams):
        G.generate(G.GeneratorSpec("moebius", {}))
    with pytest.raises(BadParams):
        G.generate(G.GeneratorSpec("cycle", {"wheels": 4}))


def test_random_planar_reproducible_bytes():
    a = G.random_planar(40, 11)
    b = G.random_planar(40, 11)
    assert a.rotation_map() == b.rotation_map()
    assert write_planar_code([a]) == write_planar_code([b])


def test_random_planar_seeds_differ():
    blobs = {write_planar_code([G.random_planar(30, s)]) for s in range(6)}
    assert len(blobs) > 1


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10_000), n=st.integers(2, 60))
def test_random_planar_invariants(seed, n):
    g = G.random_planar(n, seed)
    assert g.vertex_count == n
    assert g.is_connected()
    assert g.max_degree() <= 6
    assert g.euler_characteristic() == 2
    assert sorted(g.vertices()) == list(range(n))


def test_bad_params():
    with pytest.raises(BadParams):
        G.cycle(2)
    with pytest.raises(BadParams):
        G.tri_grid(1, 5)
    with pytest.raises(BadParams):
        G.random_planar(1, 0)
    with pytest.raises(BadParams):
        G.hex_grid(0)
