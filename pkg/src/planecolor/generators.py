"""Embedded-graph generators for the test corpus and the CLI.

Every generator is deterministic for fixed parameters. random_planar uses a
self-contained splitmix64 PRNG with fixed constants so that identical seeds
reproduce identical graphs on every platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from .embedding import EmbeddedGraph, build_embedded
from .errors import BadParams


@dataclass(frozen=True)
class GeneratorSpec:
    """A named generator plus its parameters, e.g. GeneratorSpec("tri_grid", {"rows": 4, "cols": 4})."""

    kind: str
    params: dict = field(default_factory=dict)


def generate(spec: GeneratorSpec) -> EmbeddedGraph:
    try:
        builder = _KINDS[spec.kind]
    except KeyError:
        raise BadParams(f"unknown generator kind {spec.kind!r}; known: {sorted(_KINDS)}")
    try:
        return builder(**spec.params)
    except TypeError as exc:
        raise BadParams(f"bad parameters for {spec.kind}: {exc}") from None


# ---------------------------------------------------------------------------
# Platonic solids
# ---------------------------------------------------------------------------

def tetrahedron() -> EmbeddedGraph:
    return build_embedded(4, [
        (1, 2, 3),
        (0, 3, 2),
        (0, 1, 3),
        (0, 2, 1),
    ])


def cube() -> EmbeddedGraph:
    rot = []
    for i in range(4):
        rot.append(((i - 1) % 4, i + 4, (i + 1) % 4))
    for i in range(4):
        rot.append((i, (i - 1) % 4 + 4, (i + 1) % 4 + 4))
    return build_embedded(8, rot)


def octahedron() -> EmbeddedGraph:
    rot = [(4, 3, 2, 1)]
    for i in range(1, 5):
        nxt = i % 4 + 1
        prv = (i + 2) % 4 + 1
        rot.append((0, nxt, 5, prv))
    rot.append((1, 2, 3, 4))
    return build_embedded(6, rot)


def icosahedron() -> EmbeddedGraph:
    # Top pole 0, upper ring 1..5, lower ring 6..10 (6+i-1 below edge i,i+1), bottom pole 11.
    def u(i):
        return (i - 1) % 5 + 1

    def low(i):
        return (i - 1) % 5 + 6

    rot: dict[int, tuple[int, ...]] = {0: (5, 4, 3, 2, 1), 11: (6, 7, 8, 9, 10)}
    for i in range(1, 6):
        rot[u(i)] = (0, u(i + 1), low(i), low(i - 1), u(i - 1))
        rot[low(i)] = (u(i), u(i + 1), low(i + 1), 11, low(i - 1))
    return EmbeddedGraph(rot)


def dodecahedron() -> EmbeddedGraph:
    return dual_graph(icosahedron())


def dual_graph(g: EmbeddedGraph) -> EmbeddedGraph:
    """Planar dual: one vertex per face, rotation = neighboring faces in walk order.

    Valid for inputs whose distinct faces share at most one edge (true for the
    solids this package builds duals of).
    """
    faces = g.faces()
    rot = {}
    for f in faces:
        rot[f.id] = tuple(g.face_of_dart((b, a)).id for a, b in f.boundary)
    return EmbeddedGraph(rot)


_PLATONIC = {
    "tetrahedron": tetrahedron,
    "cube": cube,
    "octahedron": octahedron,
    "dodecahedron": dodecahedron,
    "icosahedron": icosahedron,
}


def platonic(name: str) -> EmbeddedGraph:
    try:
        return _PLATONIC[name]()
    except KeyError:
        raise BadParams(f"unknown platonic solid {name!r}; known: {sorted(_PLATONIC)}")


# ---------------------------------------------------------------------------
# Lattice patches
# ---------------------------------------------------------------------------

def square_grid(rows: int, cols: int) -> EmbeddedGraph:
    """rows x cols orthogonal lattice patch."""
    if rows < 1 or cols < 1 or rows * cols < 2:
        raise BadParams("square_grid needs rows, cols >= 1 and at least two vertices")
    return _lattice(rows, cols, diagonals=False)


def tri_grid(rows: int, cols: int) -> EmbeddedGraph:
    """Square lattice patch plus one down-right diagonal per cell.

    Interior vertices have degree 6 with six incident triangles.
    """
    if rows < 2 or cols < 2:
        raise BadParams("tri_grid needs rows, cols >= 2")
    return _lattice(rows, cols, diagonals=True)


# Screen coordinates, y growing downward; clockwise order of the six
# lattice directions used by square/triangular patches.
_LATTICE_DIRS = ((0, 1), (1, 1), (1, 0), (0, -1), (-1, -1), (-1, 0))


def _lattice(rows: int, cols: int, diagonals: bool) -> EmbeddedGraph:
    def vid(r, c):
        return r * cols + c

    rot = []
    for r in range(rows):
        for c in range(cols):
            ns = []
            for dr, dc in _LATTICE_DIRS:
                if not diagonals and dr and dc:
                    continue
                rr, cc = r + dr, c + dc
                if 0 <= rr < rows and 0 <= cc < cols:
                    ns.append(vid(rr, cc))
            rot.append(tuple(ns))
    return build_embedded(rows * cols, rot)


# Corner coordinates are exact pairs (a, b) meaning the point (a/2, b*sqrt(3)/2);
# the six unit directions between corners, in clockwise order.
_HEX_DIRS = ((2, 0), (1, -1), (-1, -1), (-2, 0), (-1, 1), (1, 1))
_HEX_CORNERS = ((2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1))


def hex_grid(rings: int) -> EmbeddedGraph:
    """Honeycomb patch: all hexagonal cells within the given ring count (rings=1 is one hexagon)."""
    if rings < 1:
        raise BadParams("hex_grid needs rings >= 1")
    centers = []
    rr = rings - 1
    for q in range(-rr, rr + 1):
        for r in range(-rr, rr + 1):
            if (abs(q) + abs(r) + abs(q + r)) // 2 <= rr:
                centers.append((q, r))
    corners: set[tuple[int, int]] = set()
    edges: set[frozenset[tuple[int, int]]] = set()
    for q, r in centers:
        base = (3 * q, 2 * r + q)
        ring = [(base[0] + oa, base[1] + ob) for oa, ob in _HEX_CORNERS]
        corners.update(ring)
        for i in range(6):
            edges.add(frozenset((ring[i], ring[(i + 1) % 6])))
    ids = {p: i for i, p in enumerate(sorted(corners))}
    adj: dict[int, list[tuple[int, int]]] = {i: [] for i in ids.values()}
    for e in edges:
        p, s = tuple(e)
        adj[ids[p]].append(s)
        adj[ids[s]].append(p)
    order = {d: i for i, d in enumerate(_HEX_DIRS)}
    rot = {}
    for p, i in ids.items():
        ns = sorted(adj[i], key=lambda s: order[(s[0] - p[0], s[1] - p[1])])
        rot[i] = tuple(ids[s] for s in ns)
    return EmbeddedGraph(rot)


def cycle(n: int) -> EmbeddedGraph:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    return build_embedded(n, [((i - 1) % n, (i + 1) % n) for i in range(n)])


def path(n: int) -> EmbeddedGraph:
    if n < 1:
        raise BadParams("path needs n >= 1")
    if n == 1:
        return build_embedded(1, [()])
    rot = [(1,)]
    for i in range(1, n - 1):
        rot.append((i - 1, i + 1))
    rot.append((n - 2,))
    return build_embedded(n, rot)


# ---------------------------------------------------------------------------
# Seeded random planar graphs
# ---------------------------------------------------------------------------

class SplitMix64:
    """splitmix64 with the standard constants; stable across platforms."""

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n); modulo bias is irrelevant here."""
        return self.next64() % n

    def choice(self, seq):
        return seq[self.below(len(seq))]


def random_planar(n: int, seed: int, max_degree: int = 6) -> EmbeddedGraph:
    """Connected random planar graph on exactly n vertices with Delta <= max_degree.

    Grows a triangular-lattice patch of at least n vertices, then removes
    random vertices and a random fraction of edges, keeping the graph
    connected at every step. Vertex removal and edge removal only lower
    degrees, so the degree bound of the patch is preserved.
    """
    if n < 2:
        raise BadParams("random_planar needs n >= 2")
    if max_degree < 6:
        raise BadParams("max_degree below 6 is not supported by the lattice seed")
    rng = SplitMix64((seed << 1) ^ 0xA5A5A5A5A5A5A5A5)
    side = max(2, math.isqrt(n - 1) + 2)
    g = tri_grid(side, side)

    while g.vertex_count > n:
        verts = sorted(g.vertices())
        for _ in range(8 * len(verts)):
            v = rng.choice(verts)
            g2, _ = g.delete_vertex(v)
            if g2.is_connected():
                g = g2
                break
        else:
            raise BadParams("could not shrink patch while staying connected")

    surplus = g.edge_count - (g.vertex_count - 1)
    target_removals = (rng.below(30) * surplus) // 100  # thin 0..29% of the slack
    removed = 0
    attempts = 0
    while removed < target_removals and attempts < 20 * target_removals + 20:
        attempts += 1
        edges = sorted(g.edges())
        u, w = rng.choice(edges)
        g2 = _delete_edge(g, u, w)
        if g2.is_connected():
            g = g2
            removed += 1

    relabel = {old: new for new, old in enumerate(sorted(g.vertices()))}
    rot = {relabel[v]: tuple(relabel[u] for u in g.neighbors(v)) for v in g.vertices()}
    return EmbeddedGraph(rot)


def _delete_edge(g: EmbeddedGraph, u: int, w: int) -> EmbeddedGraph:
    rot = g.rotation_map()
    rot[u] = tuple(x for x in rot[u] if x != w)
    rot[w] = tuple(x for x in rot[w] if x != u)
    return EmbeddedGraph(rot, g.labels())


_KINDS = {
    "platonic": platonic,
    "square_grid": square_grid,
    "hex_grid": hex_grid,
    "tri_grid": tri_grid,
    "cycle": cycle,
    "path": path,
    "random_planar": random_planar,
}
