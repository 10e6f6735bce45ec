import pytest

from planecolor import generators as G

PLATONIC_NAMES = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")

GRID_SIZES = [(2, 2), (2, 3), (3, 3), (2, 5), (3, 4), (4, 4), (3, 6), (5, 5),
              (4, 7), (6, 6), (7, 7), (8, 8), (9, 9), (10, 10)]

RANDOM_COUNT = 150


def random_size(seed: int) -> int:
    return 5 + (seed * 37) % 96


def build_corpus():
    graphs = []
    for name in PLATONIC_NAMES:
        graphs.append((f"platonic:{name}", G.platonic(name)))
    for r, c in GRID_SIZES:
        graphs.append((f"square:{r}x{c}", G.square_grid(r, c)))
        graphs.append((f"tri:{r}x{c}", G.tri_grid(r, c)))
    for rings in (1, 2, 3, 4):
        graphs.append((f"hex:{rings}", G.hex_grid(rings)))
    for n in range(3, 31):
        graphs.append((f"cycle:{n}", G.cycle(n)))
    for n in range(2, 31):
        graphs.append((f"path:{n}", G.path(n)))
    for seed in range(RANDOM_COUNT):
        n = random_size(seed)
        graphs.append((f"random:n{n}s{seed}", G.random_planar(n, seed)))
    return graphs


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Corpus members small enough for the all-pairs and exact-search checks."""
    return [(name, g) for name, g in corpus if g.vertex_count <= 14]
