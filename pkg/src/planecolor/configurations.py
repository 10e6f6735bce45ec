"""Catalog of reducible local configurations and their detection.

Each catalog entry Kxx pairs a structural trigger (degrees, incident face
sizes, neighbor degrees, doubled edges) with an executable reduction: delete
one vertex and add chords inside the merged face so that every surviving pair
at distance <= 2 stays at distance <= 2. Detection evaluates every trigger
under all rotations and reflections of the neighbor labeling, so no "pick a
labeling" step is left implicit.

`forbidden_bound` on each constructed plan is the guaranteed ceiling on the
number of colors that can be blocked at the deleted vertex when the reduced
graph has been colored; it is always at most 19 against a palette of 20.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .embedding import EmbeddedGraph, Face
from .errors import DegreeTooHigh, PlanInvalid


@dataclass(frozen=True)
class ConfigurationMatch:
    """A located configuration: entry id, anchor vertex, and role bindings."""

    config_id: str
    center: int
    bindings: tuple[tuple[str, int], ...]
    matched_faces: tuple[int, ...]
    variant: str = ""

    def binding(self, role: str) -> int:
        for r, v in self.bindings:
            if r == role:
                return v
        raise KeyError(role)

    def binding_map(self) -> dict[str, int]:
        return dict(self.bindings)


@dataclass(frozen=True)
class PlanSpec:
    """Raw construction for one match: vertex to delete, chords, color bound."""

    delete: int
    chords: tuple[tuple[int, int], ...]
    forbidden_bound: int


class _Ctx:
    """Per-graph precomputation shared by all scanners."""

    __slots__ = ("g", "rot", "deg", "corner", "m3", "m4", "m5p")

    def __init__(self, g: EmbeddedGraph):
        self.g = g
        self.rot = {v: g.rotation(v) for v in g.vertices()}
        self.deg = {v: len(r) for v, r in self.rot.items()}
        self.corner = {v: g.corner_faces(v) for v in g.vertices()}
        self.m3 = {}
        self.m4 = {}
        self.m5p = {}
        for v, faces in self.corner.items():
            distinct = {f.id: f.degree for f in faces}
            self.m3[v] = sum(1 for d in distinct.values() if d == 3)
            self.m4[v] = sum(1 for d in distinct.values() if d == 4)
            self.m5p[v] = sum(1 for d in distinct.values() if d >= 5)

    def labelings(self, v: int) -> Iterator[tuple[tuple[int, ...], tuple[Face, ...]]]:
        """All rotations and reflections of the neighbor sequence at v.

        Yields (labels, corner_faces) where corner_faces[i] is the face in the
        corner between labels[i] and labels[i+1] (cyclically).
        """
        rot = self.rot[v]
        cf = self.corner[v]
        d = len(rot)
        for k in range(d):
            labels = tuple(rot[(k + i) % d] for i in range(d))
            faces = tuple(cf[(k + i) % d] for i in range(d))
            yield labels, faces
        for k in range(d):
            labels = tuple(rot[(k - i) % d] for i in range(d))
            faces = tuple(cf[(k - i - 1) % d] for i in range(d))
            yield labels, faces

    def doubled(self, a: int, b: int) -> bool:
        """Edge ab lies on two distinct triangular faces."""
        if not self.g.has_edge(a, b):
            return False
        f1 = self.g.face_of_dart((a, b))
        f2 = self.g.face_of_dart((b, a))
        return f1.degree == 3 and f2.degree == 3 and f1.id != f2.id

    def doubled_induced(self, v: int) -> list[tuple[int, int]]:
        """Edges between neighbors of v that lie on two triangles."""
        ns = sorted(self.rot[v])
        out = []
        for i, a in enumerate(ns):
            for b in ns[i + 1:]:
                if self.doubled(a, b):
                    out.append((a, b))
        return out


def _opposite_on_quad(face: Face, v: int) -> int:
    """The vertex across a 4-face from v."""
    walk = face.vertex_walk()
    return walk[(walk.index(v) + 2) % 4]


def _face_neighbor(face: Face, u: int, exclude: int) -> int:
    """u's boundary neighbor on this face other than `exclude`."""
    walk = face.vertex_walk()
    j = walk.index(u)
    n = len(walk)
    cands = {walk[(j - 1) % n], walk[(j + 1) % n]} - {exclude}
    return min(cands)


def _m(config_id, center, bindings, faces, variant=""):
    return ConfigurationMatch(
        config_id=config_id,
        center=center,
        bindings=tuple(sorted(bindings.items())),
        matched_faces=tuple(faces),
        variant=variant,
    )


# ---------------------------------------------------------------------------
# Scanners. Each yields the matches anchored at one vertex (or, for the
# 5-face entries, anchored at one face's 3-vertex).
# ---------------------------------------------------------------------------

def _scan_k01(ctx: _Ctx, v: int):
    # Degree <= 1 in a graph with something else left to color.
    if ctx.deg[v] <= 1 and ctx.g.vertex_count >= 2:
        b = {"v": v}
        if ctx.deg[v] == 1:
            b["v1"] = ctx.rot[v][0]
        yield _m("K01", v, b, ())


def _scan_k02(ctx: _Ctx, v: int):
    if ctx.deg[v] == 2:
        x, y = ctx.rot[v]
        yield _m("K02", v, {"v": v, "x": x, "y": y}, ())


def _scan_k03(ctx: _Ctx, v: int):
    # 3-vertex with a neighbor of degree <= 5.
    if ctx.deg[v] != 3:
        return
    for labels, _ in ctx.labelings(v):
        if ctx.deg[labels[0]] <= 5:
            yield _m("K03", v, {"v": v, "v1": labels[0], "v2": labels[1], "v3": labels[2]}, ())


def _scan_k04(ctx: _Ctx, v: int):
    # 3-vertex on a triangle.
    if ctx.deg[v] != 3:
        return
    for labels, faces in ctx.labelings(v):
        if faces[0].degree == 3:
            yield _m("K04", v,
                     {"v": v, "v1": labels[0], "v2": labels[1], "v3": labels[2]},
                     (faces[0].id,))


def _scan_k05(ctx: _Ctx, v: int):
    # 3-vertex between two 4-faces.
    if ctx.deg[v] != 3:
        return
    for labels, faces in ctx.labelings(v):
        if faces[0].degree == 4 and faces[1].degree == 4:
            yield _m("K05", v,
                     {"v": v, "v1": labels[0], "v2": labels[1], "v3": labels[2],
                      "x": _opposite_on_quad(faces[0], v),
                      "y": _opposite_on_quad(faces[1], v)},
                     (faces[0].id, faces[1].id))


def _scan_k06(ctx: _Ctx, v: int):
    # 4-vertex on three consecutive triangles.
    if ctx.deg[v] != 4:
        return
    for labels, faces in ctx.labelings(v):
        if faces[0].degree == 3 and faces[1].degree == 3 and faces[2].degree == 3:
            yield _m("K06", v,
                     {"v": v, **{f"v{i+1}": labels[i] for i in range(4)}},
                     (faces[0].id, faces[1].id, faces[2].id))


def _k0789_layouts(ctx: _Ctx, v: int):
    """Common 4-vertex / two-triangle layouts: yields (labels, faces, adjacent?)."""
    for labels, faces in ctx.labelings(v):
        if faces[0].degree == 3 and faces[1].degree == 3:
            yield labels, faces, True
        if faces[0].degree == 3 and faces[2].degree == 3 and faces[1].degree != 3:
            yield labels, faces, False


def _scan_k07(ctx: _Ctx, v: int):
    # 4-vertex, exactly two triangles, plus a 4-face.
    if ctx.deg[v] != 4 or ctx.m3[v] != 2 or ctx.m4[v] < 1:
        return
    for labels, faces in ctx.labelings(v):
        if faces[0].degree != 4:
            continue
        b = {"v": v, **{f"v{i+1}": labels[i] for i in range(4)},
             "x": _opposite_on_quad(faces[0], v)}
        if faces[1].degree == 3 and faces[2].degree == 3:
            yield _m("K07", v, b, (faces[0].id, faces[1].id, faces[2].id), "adjacent")
        if faces[1].degree == 3 and faces[3].degree == 3:
            yield _m("K07", v, b, (faces[0].id, faces[1].id, faces[3].id), "split")


def _scan_k08(ctx: _Ctx, v: int):
    # 4-vertex, exactly two triangles, some neighbor of degree <= 5.
    if ctx.deg[v] != 4 or ctx.m3[v] != 2:
        return
    light = [u for u in sorted(ctx.rot[v]) if ctx.deg[u] <= 5]
    if not light:
        return
    for labels, faces, adjacent in _k0789_layouts(ctx, v):
        b = {"v": v, **{f"v{i+1}": labels[i] for i in range(4)}, "w5": light[0]}
        variant = "adjacent" if adjacent else "split"
        fids = (faces[0].id, faces[1].id) if adjacent else (faces[0].id, faces[2].id)
        yield _m("K08", v, b, fids, variant)


def _scan_k09(ctx: _Ctx, v: int):
    # 4-vertex, exactly two triangles, the first triangle's outer edge doubled.
    if ctx.deg[v] != 4 or ctx.m3[v] != 2:
        return
    for labels, faces, adjacent in _k0789_layouts(ctx, v):
        if not ctx.doubled(labels[0], labels[1]):
            continue
        b = {"v": v, **{f"v{i+1}": labels[i] for i in range(4)}}
        variant = "adjacent" if adjacent else "split"
        fids = (faces[0].id, faces[1].id) if adjacent else (faces[0].id, faces[2].id)
        yield _m("K09", v, b, fids, variant)


def _scan_k10(ctx: _Ctx, v: int):
    # 4-vertex: one triangle and three 4-faces.
    if ctx.deg[v] != 4:
        return
    for labels, faces in ctx.labelings(v):
        if (faces[0].degree == 3 and faces[1].degree == 4
                and faces[2].degree == 4 and faces[3].degree == 4):
            yield _m("K10", v,
                     {"v": v, **{f"v{i+1}": labels[i] for i in range(4)},
                      "x": _opposite_on_quad(faces[1], v),
                      "y": _opposite_on_quad(faces[2], v),
                      "z": _opposite_on_quad(faces[3], v)},
                     tuple(f.id for f in faces))


def _scan_k11(ctx: _Ctx, v: int):
    # 4-vertex: one triangle, one or two 4-faces, a 4-vertex neighbor.
    if ctx.deg[v] != 4 or ctx.m3[v] != 1 or not 1 <= ctx.m4[v] <= 2:
        return
    four = [u for u in sorted(ctx.rot[v]) if ctx.deg[u] == 4]
    if not four:
        return
    for labels, faces in ctx.labelings(v):
        if faces[0].degree != 3:
            continue
        for vi in four:
            yield _m("K11", v,
                     {"v": v, **{f"v{i+1}": labels[i] for i in range(4)}, "vi": vi},
                     (faces[0].id,), f"m4={ctx.m4[v]}")


def _scan_k12(ctx: _Ctx, v: int):
    # 4-vertex: one triangle, one or two 4-faces, two neighbors of degree 5.
    if ctx.deg[v] != 4 or ctx.m3[v] != 1 or not 1 <= ctx.m4[v] <= 2:
        return
    if sum(1 for u in ctx.rot[v] if ctx.deg[u] == 5) < 2:
        return
    for labels, faces in ctx.labelings(v):
        if faces[0].degree != 3:
            continue
        b = {"v": v, **{f"v{i+1}": labels[i] for i in range(4)}}
        if ctx.m4[v] == 2:
            yield _m("K12", v, b, (faces[0].id,), "m4=2")
        elif faces[1].degree == 4:
            yield _m("K12", v, b, (faces[0].id, faces[1].id), "m4=1 near")
        elif faces[2].degree == 4:
            yield _m("K12", v, b, (faces[0].id, faces[2].id), "m4=1 far")


def _scan_k13(ctx: _Ctx, v: int):
    # 5-vertex in a full triangle fan with a neighbor of degree <= 5.
    if ctx.deg[v] != 5 or ctx.m3[v] != 5:
        return
    for labels, _ in ctx.labelings(v):
        if ctx.deg[labels[0]] <= 5:
            yield _m("K13", v, {"v": v, **{f"v{i+1}": labels[i] for i in range(5)}}, ())


def _scan_k14(ctx: _Ctx, v: int):
    # 5-vertex in a full triangle fan with a doubled edge between neighbors.
    if ctx.deg[v] != 5 or ctx.m3[v] != 5:
        return
    for a, b in ctx.doubled_induced(v):
        yield _m("K14", v, {"v": v, "v1": a, "v2": b}, ())


def _fan5_layout(ctx: _Ctx, v: int, last_degree):
    """5-vertex layouts: four triangle corners then one corner passing last_degree."""
    for labels, faces in ctx.labelings(v):
        if all(faces[i].degree == 3 for i in range(4)) and last_degree(faces[4].degree):
            yield labels, faces


def _scan_k15(ctx: _Ctx, v: int):
    # 5-vertex: four triangles and a 4-face, with a structural violation.
    if ctx.deg[v] != 5:
        return
    for labels, faces in _fan5_layout(ctx, v, lambda d: d == 4):
        b = {"v": v, **{f"v{i+1}": labels[i] for i in range(5)},
             "x": _opposite_on_quad(faces[4], v)}
        fids = tuple(f.id for f in faces)
        degs = [ctx.deg[u] for u in labels]
        if any(d <= 4 for d in degs):
            yield _m("K15", v, b, fids, "low_neighbor")
        if sum(1 for d in degs if d == 5) >= 2:
            yield _m("K15", v, b, fids, "two_fives")
        for w in labels[1:4]:
            if ctx.deg[w] == 6 and ctx.m3[w] == 6:
                yield _m("K15", v, {**b, "w": w}, fids, "saturated_six")
                break


def _scan_k16(ctx: _Ctx, v: int):
    # 5-vertex: four triangles and a big face, neighbor-degree violations.
    if ctx.deg[v] != 5:
        return
    for labels, faces in _fan5_layout(ctx, v, lambda d: d >= 5):
        b = {"v": v, **{f"v{i+1}": labels[i] for i in range(5)}}
        fids = tuple(f.id for f in faces)
        degs = [ctx.deg[u] for u in labels]
        n4 = sum(1 for d in degs if d == 4)
        n5 = sum(1 for d in degs if d == 5)
        if n4 >= 2:
            yield _m("K16", v, b, fids, "two_fours")
        if n5 >= 3:
            yield _m("K16", v, b, fids, "three_fives")
        if n4 >= 1 and n5 >= 1:
            yield _m("K16", v, b, fids, "four_plus_five")


def _scan_k17(ctx: _Ctx, v: int):
    # 5-vertex: four triangles and a big face, tight degree profile, doubled edge.
    if ctx.deg[v] != 5:
        return
    dbl = ctx.doubled_induced(v)
    if not dbl:
        return
    for labels, faces in _fan5_layout(ctx, v, lambda d: d >= 5):
        degs = [ctx.deg[u] for u in labels]
        n3 = sum(1 for d in degs if d == 3)
        n4 = sum(1 for d in degs if d == 4)
        n5 = sum(1 for d in degs if d == 5)
        n6 = sum(1 for d in degs if d == 6)
        profile = (n4, n5, n6)
        if n3 == 0 and profile in ((1, 0, 4), (0, 2, 3)):
            b = {"v": v, **{f"v{i+1}": labels[i] for i in range(5)},
                 "a": dbl[0][0], "b": dbl[0][1]}
            yield _m("K17", v, b, tuple(f.id for f in faces),
                     "one_four" if profile == (1, 0, 4) else "two_fives")


def _fan6_layout(ctx: _Ctx, v: int, last_degree):
    """6-vertex layouts: five triangle corners then one corner passing last_degree."""
    for labels, faces in ctx.labelings(v):
        if all(faces[i].degree == 3 for i in range(5)) and last_degree(faces[5].degree):
            yield labels, faces


def _doubled_fan_count(ctx: _Ctx, labels) -> int:
    return sum(1 for i in range(5) if ctx.doubled(labels[i], labels[i + 1]))


_SIX_PROFILE_V6 = ({4, 5, 6}, {3, 5, 6}, {2, 5, 6}, {1, 5, 6})
_SIX_PROFILE_V4 = ({3, 4, 6}, {3, 4, 5}, {2, 4, 5})
_SIX_PROFILE_V3 = ({2, 3, 6},)
_SIX_PROFILE_3DBL = ({2, 4, 6}, {1, 4, 6})


def _extra_triangles(ctx: _Ctx, u: int, v: int):
    """Distinct triangles at u that do not contain v."""
    seen = {}
    for f in ctx.corner[u]:
        if f.degree == 3 and v not in f.vertices():
            seen[f.id] = f
    return list(seen.values())


def _fan_neighbor_reduction(ctx: _Ctx, v: int, u: int, u_minus: int, u_plus: int):
    """Reduction deleting a fan neighbor u that carries four triangles.

    u sits on the triangles [v,u_minus,u] and [v,u,u_plus]; its two other
    triangles determine the single chord that keeps distances intact:
    two lateral triangles bridge their far vertices, a lateral plus an
    outer triangle bridges the opposite fan neighbor to the loose vertex.
    Returns (bindings, chord) or None when the shape does not apply.
    """
    if ctx.deg[u] != 5 or ctx.m3[u] != 4:
        return None
    extras = _extra_triangles(ctx, u, v)
    if len(extras) != 2:
        return None
    others = [w for w in ctx.rot[u] if w not in (v, u_minus, u_plus)]
    if len(others) != 2:
        return None
    t_plus = next((f for f in extras if u_plus in f.vertices()), None)
    t_minus = next((f for f in extras if u_minus in f.vertices()), None)
    t_outer = next((f for f in extras if u_plus not in f.vertices()
                    and u_minus not in f.vertices()), None)
    if t_plus is not None and t_minus is not None:
        s_plus = next(w for w in t_plus.vertices() if w not in (u, u_plus))
        s_minus = next(w for w in t_minus.vertices() if w not in (u, u_minus))
        chord = (s_minus, s_plus)
    elif t_plus is not None and t_outer is not None:
        s_plus = next(w for w in t_plus.vertices() if w not in (u, u_plus))
        loose = next(w for w in others if w != s_plus)
        chord = (u_minus, loose)
    elif t_minus is not None and t_outer is not None:
        s_minus = next(w for w in t_minus.vertices() if w not in (u, u_minus))
        loose = next(w for w in others if w != s_minus)
        chord = (u_plus, loose)
    else:
        return None
    bindings = {"u": u, "v7": min(others), "v8": max(others)}
    return bindings, chord


def _scan_k18(ctx: _Ctx, v: int):
    # 6-vertex: five triangles and one 4-face.
    if ctx.deg[v] != 6:
        return
    for labels, faces in _fan6_layout(ctx, v, lambda d: d == 4):
        degs = [ctx.deg[u] for u in labels]
        if any(d == 3 for d in degs):
            continue
        n4 = sum(1 for d in degs if d == 4)
        n5 = sum(1 for d in degs if d == 5)
        b = {"v": v, **{f"v{i+1}": labels[i] for i in range(6)},
             "x": _opposite_on_quad(faces[5], v)}
        fids = tuple(f.id for f in faces)

        if n4 == 2 and degs[0] == 4 and degs[5] == 4 and n5 >= 2:
            yield _m("K18", v, b, fids, "a")
        if n4 == 1 and degs[0] == 4:
            if n5 >= 4:
                yield _m("K18", v, b, fids, "b")
            elif n5 == 3 and ctx.doubled_induced(v):
                yield _m("K18", v, b, fids, "c")
        if n4 == 0 and n5 == 6:
            yield _m("K18", v, b, fids, "d")
        if n4 == 0 and n5 == 5 and 6 in degs[:3] and ctx.doubled_induced(v):
            yield _m("K18", v, b, fids, "e")
        if n4 == 0 and n5 == 4:
            if degs[0] == 6 and degs[5] == 6:
                for u, um, up in ((labels[2], labels[1], labels[3]),
                                  (labels[3], labels[2], labels[4])):
                    hit = _fan_neighbor_reduction(ctx, v, u, um, up)
                    if hit:
                        yield _m("K18", v, {**b, **hit[0]}, fids, "f")
            elif _doubled_fan_count(ctx, labels) >= 2:
                for i in range(1, 5):
                    if degs[i] == 5:
                        yield _m("K18", v, {**b, "vi": labels[i]}, fids, f"g{i+1}")
        if n4 == 0 and n5 == 3:
            positions = {i + 1 for i in range(6) if degs[i] == 5}
            if positions in _SIX_PROFILE_V6 and ctx.deg[labels[5]] == 5 \
                    and ctx.m3[labels[5]] == 4:
                yield _m("K18", v, b, fids, "h_last")
            elif positions in _SIX_PROFILE_V4:
                hit = _fan_neighbor_reduction(ctx, v, labels[3], labels[2], labels[4])
                if hit:
                    yield _m("K18", v, {**b, **hit[0]}, fids, "h_mid")
            elif positions in _SIX_PROFILE_V3:
                hit = _fan_neighbor_reduction(ctx, v, labels[2], labels[1], labels[3])
                if hit:
                    yield _m("K18", v, {**b, **hit[0]}, fids, "h_mid")
            elif positions in _SIX_PROFILE_3DBL and _doubled_fan_count(ctx, labels) >= 3:
                yield _m("K18", v, b, fids, "h_triple")


def _scan_k19(ctx: _Ctx, v: int):
    # 6-vertex: five triangles and one face of degree >= 5.
    if ctx.deg[v] != 6:
        return
    for labels, faces in _fan6_layout(ctx, v, lambda d: d >= 5):
        degs = [ctx.deg[u] for u in labels]
        if any(d == 3 for d in degs):
            continue
        n4 = sum(1 for d in degs if d == 4)
        n5 = sum(1 for d in degs if d == 5)
        b = {"v": v, **{f"v{i+1}": labels[i] for i in range(6)}}
        fids = tuple(f.id for f in faces)

        if n4 == 2 and degs[0] == 4 and degs[5] == 4 and n5 >= 3:
            yield _m("K19", v, b, fids, "a")
        if n4 == 1 and degs[0] == 4:
            if n5 >= 5:
                yield _m("K19", v, b, fids, "b")
            elif n5 == 4 and ctx.doubled_induced(v):
                yield _m("K19", v, b, fids, "c")
        if n4 == 0 and n5 == 6 and ctx.doubled_induced(v):
            yield _m("K19", v, b, fids, "d")
        if n4 == 0 and n5 == 5 and 6 in degs[:3] \
                and _doubled_fan_count(ctx, labels) >= 2:
            yield _m("K19", v, b, fids, "e")


def _scan_k20(ctx: _Ctx, v: int):
    # 6-vertex: four triangles and two 4-faces.
    if ctx.deg[v] != 6 or ctx.m3[v] != 4 or ctx.m4[v] != 2:
        return
    for labels, faces in ctx.labelings(v):
        if faces[0].degree != 4:
            continue
        degs = [ctx.deg[u] for u in labels]
        if any(d == 3 for d in degs):
            continue
        n4 = sum(1 for d in degs if d == 4)
        n5 = sum(1 for d in degs if d == 5)
        case = None
        if faces[1].degree == 4 and all(faces[i].degree == 3 for i in (2, 3, 4, 5)):
            case = "near"
        elif faces[2].degree == 4 and all(faces[i].degree == 3 for i in (1, 3, 4, 5)):
            case = "mid"
        elif faces[3].degree == 4 and all(faces[i].degree == 3 for i in (1, 2, 4, 5)):
            case = "far"
        if case is None:
            continue
        b = {"v": v, **{f"v{i+1}": labels[i] for i in range(6)}}
        fids = tuple(f.id for f in faces)
        if n4 == 1 and n5 == 5:
            yield _m("K20", v, b, fids, f"{case}/one_four")
        if n5 == 6 and ctx.doubled_induced(v):
            yield _m("K20", v, b, fids, f"{case}/doubled")


def _scan_k21(ctx: _Ctx, v: int):
    # 6-vertex: four triangles, one 4-face, one big face, with a 3-vertex
    # between the small faces and a 4-vertex flanking it.
    if ctx.deg[v] != 6:
        return
    for labels, faces in ctx.labelings(v):
        if not (faces[0].degree == 4 and faces[1].degree >= 5
                and all(faces[i].degree == 3 for i in (2, 3, 4, 5))):
            continue
        v2 = labels[1]
        if ctx.deg[v2] != 3:
            continue
        x = _opposite_on_quad(faces[0], v)
        y = _face_neighbor(faces[1], v2, v)
        b = {"v": v, **{f"v{i+1}": labels[i] for i in range(6)}, "x": x, "y": y}
        fids = tuple(f.id for f in faces)
        if ctx.deg[labels[0]] == 4:
            yield _m("K21", v, b, fids, "flank_first")
        elif ctx.deg[labels[2]] == 4:
            yield _m("K21", v, b, fids, "flank_third")


def _scan_k22(ctx: _Ctx, v: int):
    # As K21 but with two big faces around the 3-vertex.
    if ctx.deg[v] != 6:
        return
    for labels, faces in ctx.labelings(v):
        if not (faces[0].degree >= 5 and faces[1].degree >= 5
                and all(faces[i].degree == 3 for i in (2, 3, 4, 5))):
            continue
        v2 = labels[1]
        if ctx.deg[v2] != 3:
            continue
        y = _face_neighbor(faces[0], v2, v)
        z = _face_neighbor(faces[1], v2, v)
        b = {"v": v, **{f"v{i+1}": labels[i] for i in range(6)}, "y": y, "z": z}
        fids = tuple(f.id for f in faces)
        if ctx.deg[labels[0]] == 4:
            yield _m("K22", v, b, fids, "flank_first")
        elif ctx.deg[labels[2]] == 4:
            yield _m("K22", v, b, fids, "flank_third")


def _five_face_layouts(ctx: _Ctx):
    """Rotations/reflections of every 5-face with five distinct vertices."""
    for f in ctx.g.faces():
        if f.degree != 5:
            continue
        walk = f.vertex_walk()
        if len(set(walk)) != 5:
            continue
        seqs = [tuple(walk[(k + i) % 5] for i in range(5)) for k in range(5)]
        seqs += [tuple(walk[(k - i) % 5] for i in range(5)) for k in range(5)]
        for seq in seqs:
            yield f, seq


def _third_neighbor(ctx: _Ctx, u: int, a: int, b: int) -> int:
    return next(w for w in ctx.rot[u] if w not in (a, b))


def _face_scan_k23(ctx: _Ctx):
    # 5-face carrying two 3-vertices (necessarily two apart on the boundary).
    for f, seq in _five_face_layouts(ctx):
        if ctx.deg[seq[0]] == 3 and ctx.deg[seq[3]] == 3:
            v1, v2, v3, v4, v5 = seq
            b = {"v1": v1, "v2": v2, "v3": v3, "v4": v4, "v5": v5,
                 "v6": _third_neighbor(ctx, v1, v2, v5),
                 "v7": _third_neighbor(ctx, v4, v3, v5)}
            yield _m("K23", v1, b, (f.id,))


def _face_scan_k24(ctx: _Ctx):
    # 5-face carrying a 3-vertex and a 4-vertex two apart.
    for f, seq in _five_face_layouts(ctx):
        if ctx.deg[seq[0]] == 3 and ctx.deg[seq[3]] == 4:
            v1, v2, v3, v4, v5 = seq
            b = {"v1": v1, "v2": v2, "v3": v3, "v4": v4, "v5": v5,
                 "v6": _third_neighbor(ctx, v1, v2, v5)}
            yield _m("K24", v1, b, (f.id,))


# ---------------------------------------------------------------------------
# Plan construction per entry
# ---------------------------------------------------------------------------

def _spec_k12(ctx: _Ctx, m: ConfigurationMatch) -> PlanSpec:
    bm = m.binding_map()
    v1, v2, v3, v4 = bm["v1"], bm["v2"], bm["v3"], bm["v4"]
    bound = 18 if m.variant == "m4=2" else 19
    if m.variant == "m4=1 far":
        return PlanSpec(bm["v"], ((v2, v3), (v4, v1)), bound)
    if ctx.deg[v1] == 5:
        chords = ((v1, v3), (v1, v4))
    elif ctx.deg[v2] == 5:
        chords = ((v2, v3), (v2, v4))
    else:
        chords = ((v2, v3), (v3, v4), (v4, v1))
    return PlanSpec(bm["v"], chords, bound)


def _spec_k11(ctx: _Ctx, m: ConfigurationMatch) -> PlanSpec:
    bm = m.binding_map()
    vi = bm["vi"]
    others = [u for u in ctx.rot[bm["v"]] if u != vi]
    chords = tuple((vi, u) for u in others if not ctx.g.has_edge(vi, u))
    return PlanSpec(bm["v"], chords, 18 if m.variant == "m4=2" else 19)


def _spec_k18(ctx: _Ctx, m: ConfigurationMatch) -> PlanSpec:
    bm = m.binding_map()
    v = bm["v"]
    v1, v2, v3, v4, v5, v6 = (bm[f"v{i}"] for i in range(1, 7))
    var = m.variant
    if var in ("a", "b", "c"):
        return PlanSpec(v, ((v1, v3), (v1, v5), (v1, v6)), 19)
    if var == "d":
        return PlanSpec(v, ((v6, v1), (v3, v1), (v3, v5)), 19)
    if var == "e":
        return PlanSpec(v, ((v6, v1), (v4, v2), (v4, v6)), 19)
    if var.startswith("g"):
        ring = (v1, v2, v3, v4, v5, v6)
        i = ring.index(bm["vi"])
        chords = ((v6, v1), (bm["vi"], ring[(i - 2) % 6]), (bm["vi"], ring[(i + 2) % 6]))
        return PlanSpec(v, chords, 19)
    if var == "h_triple":
        return PlanSpec(v, ((v2, v4), (v4, v6), (v6, v1)), 19)
    if var == "h_last":
        return PlanSpec(v6, ((v, bm["x"]),), 19)
    if var in ("f", "h_mid"):
        u = bm["u"]
        ring = (v1, v2, v3, v4, v5, v6)
        i = ring.index(u)
        hit = _fan_neighbor_reduction(ctx, v, u, ring[i - 1], ring[(i + 1) % 6])
        if hit is None:
            raise PlanInvalid("NotOnMergedFace", ("fan-neighbor shape vanished", u))
        return PlanSpec(u, (hit[1],), 18 if var == "f" else 19)
    raise PlanInvalid("NotOnMergedFace", ("unknown variant", var))


def _spec_k19(ctx: _Ctx, m: ConfigurationMatch) -> PlanSpec:
    bm = m.binding_map()
    v = bm["v"]
    v1, v2, v3, v4, v5, v6 = (bm[f"v{i}"] for i in range(1, 7))
    if m.variant in ("a", "b", "c"):
        return PlanSpec(v, ((v1, v3), (v1, v5), (v1, v6)), 19)
    return PlanSpec(v, ((v4, v2), (v4, v6), (v1, v6)), 19)


def _spec_k20(ctx: _Ctx, m: ConfigurationMatch) -> PlanSpec:
    bm = m.binding_map()
    v = bm["v"]
    v1, v2, v3, v4, v5, _ = (bm[f"v{i}"] for i in range(1, 7))
    case = m.variant.split("/")[0]
    if case == "near":
        chords = ((v1, v2), (v2, v3), (v3, v5), (v5, v1))
    elif case == "mid":
        chords = ((v1, v2), (v3, v4), (v3, v5), (v5, v1))
    else:
        chords = ((v1, v2), (v4, v5), (v1, v3), (v3, v5))
    return PlanSpec(v, chords, 19)


def _simple_spec(delete_role, chord_roles, bound):
    def build(ctx: _Ctx, m: ConfigurationMatch) -> PlanSpec:
        bm = m.binding_map()
        chords = tuple((bm[a], bm[b]) for a, b in chord_roles)
        return PlanSpec(bm[delete_role], chords, bound)
    return build


def _spec_k21(ctx: _Ctx, m: ConfigurationMatch) -> PlanSpec:
    bm = m.binding_map()
    if m.variant == "flank_first":
        return PlanSpec(bm["v2"], ((bm["v1"], bm["y"]),), 17)
    return PlanSpec(bm["v2"], ((bm["v3"], bm["x"]), (bm["v3"], bm["y"])), 17)


def _spec_k22(ctx: _Ctx, m: ConfigurationMatch) -> PlanSpec:
    bm = m.binding_map()
    anchor = bm["v1"] if m.variant == "flank_first" else bm["v3"]
    return PlanSpec(bm["v2"], ((anchor, bm["y"]), (anchor, bm["z"])), 18)


@dataclass(frozen=True)
class CatalogEntry:
    config_id: str
    summary: str
    scan: Callable
    build: Callable
    face_anchored: bool = False


CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry("K01", "vertex of degree <= 1: delete it",
                 _scan_k01, _simple_spec("v", (), 6)),
    CatalogEntry("K02", "2-vertex: delete, join its neighbors",
                 _scan_k02, _simple_spec("v", (("x", "y"),), 12)),
    CatalogEntry("K03", "3-vertex with a light neighbor: delete, fan from that neighbor",
                 _scan_k03, _simple_spec("v", (("v1", "v2"), ("v1", "v3")), 17)),
    CatalogEntry("K04", "3-vertex on a triangle: delete, one chord",
                 _scan_k04, _simple_spec("v", (("v1", "v3"),), 16)),
    CatalogEntry("K05", "3-vertex between two 4-faces: delete, one chord",
                 _scan_k05, _simple_spec("v", (("v1", "v3"),), 16)),
    CatalogEntry("K06", "4-vertex on three triangles: delete, close the fan",
                 _scan_k06, _simple_spec("v", (("v1", "v4"),), 18)),
    CatalogEntry("K07", "4-vertex, two triangles plus a 4-face",
                 _scan_k07,
                 lambda ctx, m: PlanSpec(
                     m.binding("v"),
                     ((m.binding("v1"), m.binding("v4")),) if m.variant == "adjacent"
                     else ((m.binding("v3"), m.binding("v4")),),
                     19)),
    CatalogEntry("K08", "4-vertex, two triangles, a light neighbor",
                 _scan_k08,
                 lambda ctx, m: PlanSpec(
                     m.binding("v"),
                     ((m.binding("v2"), m.binding("v4")),) if m.variant == "adjacent"
                     else ((m.binding("v2"), m.binding("v3")),
                           (m.binding("v4"), m.binding("v1"))),
                     19)),
    CatalogEntry("K09", "4-vertex, two triangles, triangle edge doubled",
                 _scan_k09,
                 lambda ctx, m: PlanSpec(
                     m.binding("v"),
                     ((m.binding("v2"), m.binding("v4")),) if m.variant == "adjacent"
                     else ((m.binding("v2"), m.binding("v3")),
                           (m.binding("v4"), m.binding("v1"))),
                     19)),
    CatalogEntry("K10", "4-vertex, one triangle and three 4-faces",
                 _scan_k10, _simple_spec("v", (("v2", "v3"), ("v1", "v4")), 19)),
    CatalogEntry("K11", "4-vertex with a 4-neighbor: delete, star the 4-neighbor",
                 _scan_k11, _spec_k11),
    CatalogEntry("K12", "4-vertex with two 5-neighbors",
                 _scan_k12, _spec_k12),
    CatalogEntry("K13", "5-vertex, full fan, light neighbor: plain deletion",
                 _scan_k13, _simple_spec("v", (), 19)),
    CatalogEntry("K14", "5-vertex, full fan, doubled neighbor edge: plain deletion",
                 _scan_k14, _simple_spec("v", (), 19)),
    CatalogEntry("K15", "5-vertex, four triangles + 4-face: close the gap",
                 _scan_k15, _simple_spec("v", (("v5", "v1"),), 19)),
    CatalogEntry("K16", "5-vertex, four triangles + big face: close the gap",
                 _scan_k16,
                 lambda ctx, m: PlanSpec(
                     m.binding("v"), ((m.binding("v1"), m.binding("v5")),),
                     18 if m.variant == "two_fours" else 19)),
    CatalogEntry("K17", "5-vertex, four triangles + big face, doubled edge",
                 _scan_k17, _simple_spec("v", (("v5", "v1"),), 19)),
    CatalogEntry("K18", "6-vertex, five triangles + 4-face family",
                 _scan_k18, _spec_k18),
    CatalogEntry("K19", "6-vertex, five triangles + big face family",
                 _scan_k19, _spec_k19),
    CatalogEntry("K20", "6-vertex, four triangles + two 4-faces family",
                 _scan_k20, _spec_k20),
    CatalogEntry("K21", "3-vertex between a 4-face and a big face at a 6-vertex",
                 _scan_k21, _spec_k21),
    CatalogEntry("K22", "3-vertex between two big faces at a 6-vertex",
                 _scan_k22, _spec_k22),
    CatalogEntry("K23", "5-face with two 3-vertices",
                 _face_scan_k23,
                 _simple_spec("v1", (("v2", "v4"), ("v4", "v6")), 18),
                 face_anchored=True),
    CatalogEntry("K24", "5-face with a 3-vertex and a 4-vertex",
                 _face_scan_k24,
                 _simple_spec("v1", (("v2", "v4"), ("v4", "v6")), 18),
                 face_anchored=True),
)

_BY_ID = {e.config_id: e for e in CATALOG}


def catalog_entry(config_id: str) -> CatalogEntry:
    return _BY_ID[config_id]


# ---------------------------------------------------------------------------
# Detection
# ---------------------------------------------------------------------------

def _check_degree(g: EmbeddedGraph) -> None:
    for v in g.vertices():
        if g.degree(v) > 6:
            raise DegreeTooHigh(v, g.degree(v))


def detect_iter(g: EmbeddedGraph, catalog=None) -> Iterator[ConfigurationMatch]:
    """Matches in priority order: ascending entry id, then center, then bindings."""
    _check_degree(g)
    ctx = _Ctx(g)
    for entry in (catalog or CATALOG):
        found = []
        seen = set()
        if entry.face_anchored:
            candidates = entry.scan(ctx)
        else:
            candidates = (m for v in sorted(ctx.rot) for m in entry.scan(ctx, v))
        for m in candidates:
            key = (m.center, m.variant, m.bindings)
            if key not in seen:
                seen.add(key)
                found.append(m)
        found.sort(key=lambda m: (m.center, m.variant, m.bindings))
        yield from found


def detect_all(g: EmbeddedGraph, catalog=None) -> list[ConfigurationMatch]:
    return list(detect_iter(g, catalog))


def detect(g: EmbeddedGraph, catalog=None) -> Optional[ConfigurationMatch]:
    return next(detect_iter(g, catalog), None)


def build_plan_spec(g: EmbeddedGraph, match: ConfigurationMatch) -> PlanSpec:
    """Raw (delete, chords, bound) for a match, before validation."""
    ctx = _Ctx(g)
    return _BY_ID[match.config_id].build(ctx, match)
