"""Reducible configurations for 2-facial edge coloring with 7 colors.

Each configuration comes with a surgery producing smaller graphs and an
extension that turns a coloring of the smaller graphs back into a coloring
of the original.  :func:`construct_7_coloring` runs detect / apply /
recurse / extend down to a small base case solved exactly.

Configurations are tried in a fixed order; every surgery relies on the
absence of all earlier kinds in the current graph.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Sequence

from . import embed, exact
from .embed import EmbeddingError, PlaneGraph
from .facial import Coloring, conflicts, lists_from_partial, verify
from .listcolor import ListGraph, core, l_color

log = logging.getLogger(__name__)

ELL = 2
K = 7
BASE_EDGES = 12


class Kind(str, Enum):
    CUTVERTEX = "Cutvertex"
    DEGREE_LE1 = "DegreeLE1"
    ADJACENT_TWO_VERTICES = "AdjacentTwoVertices"
    FACE_LE3 = "FaceLE3"
    SEPARATING_CYCLE_LE5 = "SeparatingCycleLE5"
    SIX_FACE = "SixFace"
    SMALL_FACE_WITH_TWO_VERTEX = "SmallFaceWithTwoVertex"
    TWO_VERTICES_CLOSE = "TwoVerticesClose"
    EIGHT_FACE_TWO_TWO_VERTICES = "EightFaceTwoTwoVertices"
    ADJACENT_FOUR_FACES = "AdjacentFourFaces"
    FOUR_FIVE_LOW_DEGREE = "FourFiveLowDegree"
    FIVE_FIVE_LOW_DEGREE = "FiveFiveLowDegree"
    FOUR_FACE_ALL_THREES = "FourFaceAllThrees"

    def __str__(self) -> str:
        return self.value


ORDER = tuple(Kind)


class ReductionError(RuntimeError):
    pass


class PreconditionError(ReductionError):
    """A side condition of the surgery does not hold in the graph."""

    def __init__(self, kind: Kind, message: str):
        super().__init__(f"{kind}: {message}")
        self.kind = kind


class ExtensionFailed(ReductionError):
    """A coloring of the reduced graph could not be extended."""

    def __init__(self, message: str, graph: PlaneGraph, step: "ReductionStep | None" = None, partial=None):
        super().__init__(message)
        self.graph = graph
        self.step = step
        self.partial = partial


@dataclass(frozen=True)
class Configuration:
    kind: Kind
    vertices: tuple[tuple[str, int], ...] = ()
    edges: tuple[tuple[str, int], ...] = ()
    faces: tuple[int, ...] = ()
    case: int | None = None

    def v(self, name: str) -> int:
        return dict(self.vertices)[name]

    def e(self, name: str) -> int:
        return dict(self.edges)[name]

    def witness_ids(self) -> str:
        parts = [f"{n}:{x}" for n, x in self.vertices]
        parts += [f"{n}:e{x}" for n, x in self.edges]
        parts += [f"f{x}" for x in self.faces]
        return ",".join(parts)

    @property
    def label(self) -> str:
        return f"{self.kind}({self.case})" if self.case is not None else str(self.kind)


@dataclass
class Part:
    graph: PlaneGraph
    id_map: dict[int, int]


@dataclass
class ReductionStep:
    """Result of a surgery.

    ``parts`` are the smaller graphs to color; ``id_map`` of each part sends
    edges of the original graph to edges of the part.  ``to_color`` lists
    original edges recolored during extension; ``same_color`` pairs of
    original edges merged by an identification.  For a composite surgery
    ``inner`` reduces the intermediate graph ``mid`` further.
    """

    config: Configuration
    parts: list[Part]
    to_color: frozenset[int]
    same_color: tuple[tuple[int, int], ...] = ()
    mid: PlaneGraph | None = None
    mid_map: dict[int, int] | None = None
    inner: "ReductionStep | None" = None

    @property
    def reduced(self) -> PlaneGraph:
        if len(self.parts) != 1:
            raise AttributeError("step has several reduced parts")
        return self.parts[0].graph

    @property
    def id_map(self) -> dict[int, int]:
        return self.parts[0].id_map


# -- helpers ----------------------------------------------------------------------


def _walk_from(G: PlaneGraph, face: int, start: int) -> tuple[list[int], list[int]]:
    """Darts and tail vertices of a facial walk, rotated to begin at ``start``."""
    darts = list(G.faces[face].darts)
    i = darts.index(start)
    darts = darts[i:] + darts[:i]
    return darts, [G.vertex_of(d) for d in darts]


def _distinct(xs: Sequence[int]) -> bool:
    return len(set(xs)) == len(xs)


def _far(G: PlaneGraph, e: int, f: int) -> bool:
    return G.facial_distance(e, f) > ELL


def _two_vertices(G: PlaneGraph) -> list[int]:
    return [v for v in G.vertices() if G.degree(v) == 2]


# -- candidate generators, one per kind ---------------------------------------------


def _cutvertex(G: PlaneGraph) -> Iterator[Configuration]:
    if not G.is_connected():
        return
    for x in embed.cut_vertices(G):
        yield Configuration(Kind.CUTVERTEX, (("x", x),))


def _degree_le1(G: PlaneGraph) -> Iterator[Configuration]:
    for v in G.vertices():
        if G.degree(v) == 1:
            (d,) = G.rotation(v)
            yield Configuration(Kind.DEGREE_LE1, (("v", v), ("u", G.head(d))), (("uv", G.edge_of(d)),))


def _adjacent_two_vertices(G: PlaneGraph) -> Iterator[Configuration]:
    for e in G.edges():
        a, b = G.endpoints(e)
        if a != b and G.degree(a) == 2 and G.degree(b) == 2:
            u, v = min(a, b), max(a, b)
            other = [d for d in G.rotation(v) if G.edge_of(d) != e]
            if len(other) != 1:
                continue
            w = G.head(other[0])
            yield Configuration(
                Kind.ADJACENT_TWO_VERTICES,
                (("u", u), ("v", v), ("w", w)),
                (("uv", e), ("vw", G.edge_of(other[0]))),
            )


def _face_le3(G: PlaneGraph) -> Iterator[Configuration]:
    for walk in G.faces:
        if len(walk) <= 3:
            es = [G.edge_of(d) for d in walk.darts]
            vs = [G.vertex_of(d) for d in walk.darts]
            yield Configuration(
                Kind.FACE_LE3,
                tuple((f"v{i + 1}", v) for i, v in enumerate(vs)),
                tuple((f"e{i + 1}", e) for i, e in enumerate(es)),
                (walk.face,),
                case=len(walk),
            )


def _separating_cycle(G: PlaneGraph) -> Iterator[Configuration]:
    for cyc in embed.cycles_up_to(G, 5):
        if len(cyc) >= 2 and cyc.separating:
            yield Configuration(
                Kind.SEPARATING_CYCLE_LE5,
                tuple((f"c{i + 1}", v) for i, v in enumerate(cyc.vertices)),
                tuple((f"c{i + 1}c{i + 2}", e) for i, e in enumerate(cyc.edges)),
                case=len(cyc),
            )


def _six_face_config(G: PlaneGraph, face: int) -> Configuration | None:
    walk = G.faces[face]
    for j in range(3):
        darts, vs = _walk_from(G, face, walk.darts[j])
        if not _distinct(vs):
            return None
        es = [G.edge_of(d) for d in darts]
        # labels v1..v6 follow the walk; v6v1 and v3v4 get identified
        if _far(G, es[5], es[2]):
            return Configuration(
                Kind.SIX_FACE,
                tuple((f"v{i + 1}", v) for i, v in enumerate(vs)),
                tuple((n, es[i]) for i, n in enumerate(["v1v2", "v2v3", "v3v4", "v4v5", "v5v6", "v6v1"])),
                (face,),
            )
    return None


def _six_face(G: PlaneGraph) -> Iterator[Configuration]:
    for walk in G.faces:
        if len(walk) == 6:
            c = _six_face_config(G, walk.face)
            if c is not None:
                yield c
            else:
                vs = [G.vertex_of(d) for d in walk.darts]
                es = [G.edge_of(d) for d in walk.darts]
                yield Configuration(
                    Kind.SIX_FACE,
                    tuple((f"v{i + 1}", v) for i, v in enumerate(vs)),
                    tuple((f"d{i}", e) for i, e in enumerate(es)),
                    (walk.face,),
                )


def _small_face_two_vertex(G: PlaneGraph) -> Iterator[Configuration]:
    for v in _two_vertices(G):
        d_out = G.rotation(v)
        if G.head(d_out[0]) == v:
            continue
        faces = sorted({G.face_of(G.twin(d)) for d in d_out} | {G.face_of(d) for d in d_out})
        lengths = {f: G.face_length(f) for f in faces}
        for case in (4, 5, 7):
            for f in faces:
                if lengths[f] != case:
                    continue
                # walk of f through v: rotate so that v sits at index 1
                darts = list(G.faces[f].darts)
                idx = [i for i, d in enumerate(darts) if G.vertex_of(d) == v]
                if len(idx) != 1:
                    continue
                i = idx[0]
                darts, vs = _walk_from(G, f, darts[i - 1])
                es = [G.edge_of(d) for d in darts]
                names_v = [("u", vs[0]), ("v", vs[1]), ("w", vs[2])]
                names_e = [("uv", es[0]), ("vw", es[1])]
                other = [g for g in faces if g != f]
                beta = other[0] if other else f
                if case == 5:
                    names_v += [("x1", vs[3]), ("x2", vs[4])]
                    names_e += [("wx1", es[2]), ("x1x2", es[3]), ("x2u", es[4])]
                if case == 7:
                    names_v += [(f"x{k}", vs[2 + k]) for k in range(1, 5)]
                    names_e += [("wx1", es[2]), ("x1x2", es[3]), ("x2x3", es[4]), ("x3x4", es[5]), ("x4u", es[6])]
                sub = None
                if case == 5:
                    if lengths.get(beta) == 5:
                        sub = 50
                    elif lengths.get(beta, 0) >= 7:
                        sub = 57
                    else:
                        continue
                    bdarts, bvs = _walk_from(G, beta, G.twin(darts[1]))
                    # beta runs w -> v -> u -> y1 -> y2 ... z2 -> z1 -> w
                    if sub == 57:
                        names_v += [("y1", bvs[3]), ("y2", bvs[4]), ("z1", bvs[-1]), ("z2", bvs[-2])]
                        names_e += [
                            ("uy1", G.edge_of(bdarts[2])),
                            ("y1y2", G.edge_of(bdarts[3])),
                            ("z1w", G.edge_of(bdarts[-1])),
                            ("z2z1", G.edge_of(bdarts[-2])),
                        ]
                yield Configuration(
                    Kind.SMALL_FACE_WITH_TWO_VERTEX,
                    tuple(names_v),
                    tuple(names_e),
                    (f, beta),
                    case=case if sub is None else sub,
                )


def _two_vertices_close(G: PlaneGraph) -> Iterator[Configuration]:
    two = set(_two_vertices(G))
    for dist in (2, 3):
        for walk in G.faces:
            n = len(walk)
            if n < dist + 3:
                continue
            vs = [G.vertex_of(d) for d in walk.darts]
            for i in range(n):
                j = (i + dist) % n
                if vs[i] not in two or vs[j] not in two or vs[i] == vs[j]:
                    continue
                darts, ws = _walk_from(G, walk.face, walk.darts[(i - 1) % n])
                es = [G.edge_of(d) for d in darts]
                if dist == 2:
                    # x u w v y
                    names_v = [("x", ws[0]), ("u", ws[1]), ("w", ws[2]), ("v", ws[3]), ("y", ws[4])]
                    names_e = [("ux", es[0]), ("uw", es[1]), ("vw", es[2]), ("vy", es[3])]
                else:
                    # x u w z v y
                    names_v = [("x", ws[0]), ("u", ws[1]), ("w", ws[2]), ("z", ws[3]), ("v", ws[4]), ("y", ws[5])]
                    names_e = [("ux", es[0]), ("uw", es[1]), ("wz", es[2]), ("vz", es[3]), ("vy", es[4])]
                if not _distinct([x for _, x in names_v]):
                    continue
                yield Configuration(Kind.TWO_VERTICES_CLOSE, tuple(names_v), tuple(names_e), (walk.face,), case=dist)


def _eight_face(G: PlaneGraph) -> Iterator[Configuration]:
    two = set(_two_vertices(G))
    for walk in G.faces:
        if len(walk) != 8:
            continue
        vs = [G.vertex_of(d) for d in walk.darts]
        hits = [i for i, v in enumerate(vs) if v in two]
        if len(hits) < 2:
            continue
        for i in hits:
            if (i + 4) % 8 in hits:
                darts, ws = _walk_from(G, walk.face, walk.darts[i])
                es = [G.edge_of(d) for d in darts]
                names_e = [f"v{k + 1}v{k + 2 if k < 7 else 1}" for k in range(8)]
                yield Configuration(
                    Kind.EIGHT_FACE_TWO_TWO_VERTICES,
                    tuple((f"v{k + 1}", x) for k, x in enumerate(ws)),
                    tuple(zip(names_e, es)),
                    (walk.face,),
                )
                break


def _adjacent_four_faces(G: PlaneGraph) -> Iterator[Configuration]:
    for e in G.edges():
        fa, fb = G.edge_faces(e)
        if fa != fb and G.face_length(fa) == 4 and G.face_length(fb) == 4:
            yield Configuration(Kind.ADJACENT_FOUR_FACES, (), (("e", e),), (fa, fb))


def _seq_from_edge(G: PlaneGraph, face: int, dart: int, first: int) -> list[int]:
    """Vertices of a face starting ``first, other-end, ...`` along ``dart``'s edge."""
    _, vs = _walk_from(G, face, dart)
    if vs[0] == first:
        return vs
    # walk traverses the edge towards ``first``: read it backwards
    rev = [vs[1], vs[0]] + list(reversed(vs[2:]))
    return rev


def _four_five(G: PlaneGraph) -> Iterator[Configuration]:
    for e in G.edges():
        a, b = G.edge_darts(e)
        fa, fb = G.face_of(a), G.face_of(b)
        if fa == fb or G.is_loop(e):
            continue
        lens = (G.face_length(fa), G.face_length(fb))
        if sorted(lens) != [4, 5]:
            continue
        p, q = G.endpoints(e)
        low = [x for x in (p, q) if G.degree(x) <= 3]
        if not low:
            continue
        u = min(low)
        v = q if u == p else p
        f4, d4 = (fa, a) if lens[0] == 4 else (fb, b)
        f5, d5 = (fb, b) if lens[0] == 4 else (fa, a)
        alpha = _seq_from_edge(G, f4, d4, u)  # u v v1 u1
        beta = _seq_from_edge(G, f5, d5, u)  # u v v2 w u2
        if not _distinct(alpha) or not _distinct(beta):
            continue
        v1, u1 = alpha[2], alpha[3]
        v2, w, u2 = beta[2], beta[3], beta[4]
        names_v = [("u", u), ("v", v), ("v1", v1), ("u1", u1), ("v2", v2), ("w", w), ("u2", u2)]
        ed = _edge_lookup(G, f4, f5)
        yield Configuration(
            Kind.FOUR_FIVE_LOW_DEGREE,
            tuple(names_v),
            (
                ("uv", e),
                ("vv1", ed[(v, v1)]),
                ("u1v1", ed[(u1, v1)]),
                ("uu1", ed[(u, u1)]),
                ("vv2", ed[(v, v2)]),
                ("v2w", ed[(v2, w)]),
                ("u2w", ed[(u2, w)]),
                ("uu2", ed[(u, u2)]),
            ),
            (f4, f5),
        )


def _edge_lookup(G: PlaneGraph, *faces: int) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for f in faces:
        for d in G.faces[f].darts:
            x, y = G.vertex_of(d), G.head(d)
            out.setdefault((x, y), G.edge_of(d))
            out.setdefault((y, x), G.edge_of(d))
    return out


def _five_five(G: PlaneGraph) -> Iterator[Configuration]:
    for e in G.edges():
        a, b = G.edge_darts(e)
        fa, fb = G.face_of(a), G.face_of(b)
        if fa == fb or G.is_loop(e):
            continue
        if G.face_length(fa) != 5 or G.face_length(fb) != 5:
            continue
        u, v = G.vertex_of(a), G.head(a)
        if G.degree(u) > 3 or G.degree(v) > 3:
            continue
        alpha = _seq_from_edge(G, fa, a, u)  # u v v1 w1 u1
        beta = _seq_from_edge(G, fb, b, u)  # u v v2 w2 u2
        if not _distinct(alpha) or not _distinct(beta):
            continue
        v1, w1, u1 = alpha[2], alpha[3], alpha[4]
        v2, w2, u2 = beta[2], beta[3], beta[4]
        ed = _edge_lookup(G, fa, fb)
        yield Configuration(
            Kind.FIVE_FIVE_LOW_DEGREE,
            (("u", u), ("v", v), ("v1", v1), ("w1", w1), ("u1", u1), ("v2", v2), ("w2", w2), ("u2", u2)),
            (
                ("uv", e),
                ("vv1", ed[(v, v1)]),
                ("v1w1", ed[(v1, w1)]),
                ("u1w1", ed[(u1, w1)]),
                ("uu1", ed[(u, u1)]),
                ("vv2", ed[(v, v2)]),
                ("v2w2", ed[(v2, w2)]),
                ("u2w2", ed[(u2, w2)]),
                ("uu2", ed[(u, u2)]),
            ),
            (fa, fb),
        )


def _four_face_threes(G: PlaneGraph) -> Iterator[Configuration]:
    for walk in G.faces:
        if len(walk) != 4:
            continue
        vs = [G.vertex_of(d) for d in walk.darts]
        if not _distinct(vs) or any(G.degree(x) != 3 for x in vs):
            continue
        names_e = [(f"v{i + 1}v{i + 2 if i < 3 else 1}", G.edge_of(d)) for i, d in enumerate(walk.darts)]
        face_edges = {e for _, e in names_e}
        for i, x in enumerate(vs):
            third = [d for d in G.rotation(x) if G.edge_of(d) not in face_edges]
            for d in third:
                names_e.append((f"u{i + 1}v{i + 1}", G.edge_of(d)))
        yield Configuration(
            Kind.FOUR_FACE_ALL_THREES,
            tuple((f"v{i + 1}", x) for i, x in enumerate(vs)),
            tuple(names_e),
            (walk.face,),
        )


_FINDERS = {
    Kind.CUTVERTEX: _cutvertex,
    Kind.DEGREE_LE1: _degree_le1,
    Kind.ADJACENT_TWO_VERTICES: _adjacent_two_vertices,
    Kind.FACE_LE3: _face_le3,
    Kind.SEPARATING_CYCLE_LE5: _separating_cycle,
    Kind.SIX_FACE: _six_face,
    Kind.SMALL_FACE_WITH_TWO_VERTEX: _small_face_two_vertex,
    Kind.TWO_VERTICES_CLOSE: _two_vertices_close,
    Kind.EIGHT_FACE_TWO_TWO_VERTICES: _eight_face,
    Kind.ADJACENT_FOUR_FACES: _adjacent_four_faces,
    Kind.FOUR_FIVE_LOW_DEGREE: _four_five,
    Kind.FIVE_FIVE_LOW_DEGREE: _five_five,
    Kind.FOUR_FACE_ALL_THREES: _four_face_threes,
}


def candidates(G: PlaneGraph, kind: Kind) -> list[Configuration]:
    return list(_FINDERS[kind](G))


def _first_step(G: PlaneGraph) -> tuple[Configuration, "ReductionStep"] | None:
    # finders may over-approximate; a candidate whose surgery rejects it is skipped
    for kind in ORDER:
        for c in _FINDERS[kind](G):
            try:
                return c, apply(G, c, check=False)
            except PreconditionError:
                continue
    return None


def detect(G: PlaneGraph) -> Configuration | None:
    """First configuration in the fixed kind order whose surgery applies, or
    ``None``."""
    found = _first_step(G)
    return None if found is None else found[0]


def holds(G: PlaneGraph, c: Configuration) -> bool:
    """Re-check that ``c`` is a configuration of its kind in ``G``."""
    return any(c == other for other in _FINDERS[c.kind](G))


# -- surgeries -------------------------------------------------------------------


def _identity(G: PlaneGraph, H: PlaneGraph) -> dict[int, int]:
    return {e: e for e in G.edges() if H.has_edge(e)}


def _single(c: Configuration, G: PlaneGraph, H: PlaneGraph, to_color, id_map=None, same=()) -> ReductionStep:
    if id_map is None:
        id_map = _identity(G, H)
    return ReductionStep(c, [Part(H, id_map)], frozenset(to_color), tuple(same))


def _rotation_intervals(G: PlaneGraph, x: int, edges: set[int]) -> int:
    flags = [G.edge_of(d) in edges for d in G.rotation(x)]
    return sum(1 for i in range(len(flags)) if flags[i] and not flags[i - 1]) if not all(flags) else 1


def _apply_cutvertex(G: PlaneGraph, c: Configuration) -> ReductionStep:
    x = c.v("x")
    pieces: list[set[int]] = []
    rest = embed.delete_vertex(G, x)
    for comp in rest.components():
        pieces.append({e for e in G.edges() if set(G.endpoints(e)) & comp})
    for e in G.edges():
        if G.is_loop(e) and G.endpoints(e)[0] == x:
            pieces.append({e})
    if len(pieces) < 2:
        raise PreconditionError(c.kind, f"vertex {x} does not separate the graph")
    pieces.sort(key=min)
    # a piece occupying one interval of the rotation at x keeps the
    # interface to at most two corners
    single = [p for p in pieces if _rotation_intervals(G, x, p) == 1]
    h1 = single[0] if single else pieces[0]
    h2 = set(G.edges()) - h1
    g1 = embed.subgraph(G, h1)
    g2 = embed.subgraph(G, h2)
    return ReductionStep(
        c,
        [Part(g1, {e: e for e in h1}), Part(g2, {e: e for e in h2})],
        frozenset(),
    )


def _cycle_edge_sides(G: PlaneGraph, cyc_darts: Sequence[int], left_v, right_v) -> tuple[set[int], set[int]]:
    cyc_edges = {G.edge_of(d) for d in cyc_darts}
    left, right = set(), set()
    for e in G.edges():
        if e in cyc_edges:
            continue
        ends = set(G.endpoints(e))
        if ends & left_v:
            left.add(e)
        elif ends & right_v:
            right.add(e)
    # chords between cycle vertices: side from the rotation interval
    for i, out in enumerate(cyc_darts):
        inc = G.twin(cyc_darts[i - 1])
        rot = G.rotation(G.vertex_of(out))
        after_inc = embed._after(rot, inc)
        lside = after_inc[: after_inc.index(out)]
        for d in rot:
            e = G.edge_of(d)
            if e in cyc_edges or e in left or e in right:
                continue
            (left if d in lside else right).add(e)
    return left, right


def _apply_separating_cycle(G: PlaneGraph, c: Configuration) -> ReductionStep:
    cyc_edges = [e for _, e in c.edges]
    match = [cy for cy in embed.cycles_up_to(G, len(cyc_edges)) if list(cy.edges) == cyc_edges]
    if not match or not match[0].separating:
        raise PreconditionError(c.kind, "cycle is not separating")
    cy = match[0]
    left, right = _cycle_edge_sides(G, cy.darts, cy.left, cy.right)
    inner = embed.subgraph(G, left | set(cyc_edges))
    outer = embed.subgraph(G, right | set(cyc_edges))
    return ReductionStep(
        c,
        [Part(inner, _identity(G, inner)), Part(outer, _identity(G, outer))],
        frozenset(),
    )


def _check_identification(kind: Kind, G: PlaneGraph, e: int, f: int) -> None:
    ends = set(G.endpoints(e)) | set(G.endpoints(f))
    if len(ends) != 4:
        raise PreconditionError(kind, f"edges {e} and {f} share an endpoint")
    if not _far(G, e, f):
        raise PreconditionError(kind, f"edges {e} and {f} are 2-facial neighbours")


def _apply_six_face(G: PlaneGraph, c: Configuration) -> ReductionStep:
    names = dict(c.edges)
    if "v6v1" not in names:
        raise PreconditionError(c.kind, "no opposite edge pair of the 6-face can be identified")
    if not _distinct([x for _, x in c.vertices]):
        raise PreconditionError(c.kind, "6-face vertices are not distinct")
    e, f = names["v6v1"], names["v3v4"]
    _check_identification(c.kind, G, e, f)
    H, id_map = embed.identify_edges(
        G, e, f, orientation={c.v("v1"): c.v("v3"), c.v("v6"): c.v("v4")}, face=c.faces[0]
    )
    to_color = [names[n] for n in ("v1v2", "v2v3", "v4v5", "v5v6")]
    return _single(c, G, H, to_color, id_map, [(e, f)])


def _apply_small_face(G: PlaneGraph, c: Configuration) -> ReductionStep:
    v = c.v("v")
    uv, vw = c.e("uv"), c.e("vw")
    case = c.case
    if case == 4:
        return _single(c, G, embed.delete_vertex(G, v), [uv, vw])
    if case == 50:
        mid = embed.delete_vertex(G, v)
        gamma = mid.face_of(_dart_from(G, c.e("x1x2"), c.v("x1")))
        if mid.face_length(gamma) != 6:
            raise PreconditionError(c.kind, "faces around the 2-vertex do not merge into a 6-face")
        inner_c = _six_face_config(mid, gamma)
        if inner_c is None:
            raise PreconditionError(c.kind, "no identifiable opposite pair on the merged 6-face")
        inner = _apply_six_face(mid, inner_c)
        return ReductionStep(
            c, inner.parts, frozenset([uv, vw]), mid=mid, mid_map=_identity(G, mid), inner=inner
        )
    if case == 57:
        y1, z1, u = c.v("y1"), c.v("z1"), c.v("u")
        names = [x for _, x in c.vertices]
        if not _distinct(names):
            raise PreconditionError(c.kind, "vertices around the 7+-face are not distinct")
        mid = embed.delete_vertex(G, v)
        if mid.adjacent(y1, z1):
            raise PreconditionError(c.kind, f"y1={y1} and z1={z1} are adjacent")
        face = mid.face_of(_dart_from(G, c.e("uy1"), u))
        H = embed.identify_vertices(mid, y1, z1, face=face)
        return _single(c, G, H, [uv, vw, c.e("uy1"), c.e("z1w")])
    if case == 7:
        e, f = c.e("x4u"), c.e("x1x2")
        if not _distinct([x for _, x in c.vertices]):
            raise PreconditionError(c.kind, "7-face vertices are not distinct")
        _check_identification(c.kind, G, e, f)
        H, id_map = embed.identify_edges(
            G, e, f, orientation={c.v("u"): c.v("x1"), c.v("x4"): c.v("x2")}, face=c.faces[0]
        )
        to_color = [uv, vw, c.e("wx1"), c.e("x2x3"), c.e("x3x4")]
        return _single(c, G, H, to_color, id_map, [(e, f)])
    raise PreconditionError(c.kind, f"unknown case {case}")


def _dart_of(G: PlaneGraph, e: int) -> int:
    return G.edge_darts(e)[0]


def _dart_from(G: PlaneGraph, e: int, v: int) -> int:
    a, b = G.edge_darts(e)
    return a if G.vertex_of(a) == v else b


def _apply_two_close(G: PlaneGraph, c: Configuration) -> ReductionStep:
    H = embed.delete_vertices(G, [c.v("u"), c.v("v")])
    if c.case == 2:
        to_color = [c.e(n) for n in ("ux", "uw", "vw", "vy")]
    else:
        to_color = [c.e(n) for n in ("ux", "uw", "vz", "vy")]
    return _single(c, G, H, to_color)


def _apply_eight_face(G: PlaneGraph, c: Configuration) -> ReductionStep:
    if not _distinct([x for _, x in c.vertices]):
        raise PreconditionError(c.kind, "8-face vertices are not distinct")
    e, f = c.e("v2v3"), c.e("v6v7")
    _check_identification(c.kind, G, e, f)
    H, id_map = embed.identify_edges(
        G, e, f, orientation={c.v("v3"): c.v("v6"), c.v("v2"): c.v("v7")}, face=c.faces[0]
    )
    to_color = [c.e(n) for n in ("v1v2", "v3v4", "v4v5", "v5v6", "v7v8", "v8v1")]
    return _single(c, G, H, to_color, id_map, [(e, f)])


def _apply_adjacent_four(G: PlaneGraph, c: Configuration) -> ReductionStep:
    e = c.e("e")
    return _single(c, G, embed.delete_edge(G, e), [e])


def _apply_four_five(G: PlaneGraph, c: Configuration) -> ReductionStep:
    if not _distinct([x for _, x in c.vertices]):
        raise PreconditionError(c.kind, "face vertices are not distinct")
    uv, e, f = c.e("uv"), c.e("vv1"), c.e("u2w")
    _check_identification(c.kind, G, e, f)
    mid = embed.delete_edge(G, uv)
    H, id_map = embed.identify_edges(mid, e, f, orientation={c.v("v"): c.v("w"), c.v("v1"): c.v("u2")})
    to_color = [c.e(n) for n in ("uu1", "u1v1", "vv2", "v2w", "uu2")] + [uv]
    return _single(c, G, H, to_color, id_map, [(e, f)])


def _apply_five_five(G: PlaneGraph, c: Configuration) -> ReductionStep:
    if not _distinct([x for _, x in c.vertices]):
        raise PreconditionError(c.kind, "face vertices are not distinct")
    uv, e, f = c.e("uv"), c.e("u1w1"), c.e("v2w2")
    _check_identification(c.kind, G, e, f)
    mid = embed.delete_edge(G, uv)
    H, id_map = embed.identify_edges(mid, e, f, orientation={c.v("u1"): c.v("w2"), c.v("w1"): c.v("v2")})
    to_color = [c.e(n) for n in ("uu1", "v1w1", "vv1", "vv2", "u2w2", "uu2")] + [uv]
    return _single(c, G, H, to_color, id_map, [(e, f)])


def _apply_four_face_threes(G: PlaneGraph, c: Configuration) -> ReductionStep:
    vs = [x for _, x in c.vertices]
    if any(G.degree(x) != 3 for x in vs) or not _distinct(vs):
        raise PreconditionError(c.kind, "face is not bounded by four distinct 3-vertices")
    to_color = {e for x in vs for e in G.incident_edges(x)}
    return _single(c, G, embed.delete_vertices(G, vs), to_color)


def _apply_degree_le1(G: PlaneGraph, c: Configuration) -> ReductionStep:
    return _single(c, G, embed.delete_vertex(G, c.v("v")), [c.e("uv")])


def _apply_adjacent_two(G: PlaneGraph, c: Configuration) -> ReductionStep:
    return _single(c, G, embed.delete_vertex(G, c.v("v")), [c.e("uv"), c.e("vw")])


def _apply_face_le3(G: PlaneGraph, c: Configuration) -> ReductionStep:
    es = [e for _, e in c.edges]
    if c.case in (1, 2):
        e = max(es)
        return _single(c, G, embed.delete_edge(G, e), [e])
    vs = [x for _, x in c.vertices]
    if not _distinct(vs) or not _distinct(es):
        raise PreconditionError(c.kind, "triangular face has repeated corners")
    H = embed.contract_face(G, c.faces[0])
    return _single(c, G, H, es)


_APPLY = {
    Kind.CUTVERTEX: _apply_cutvertex,
    Kind.DEGREE_LE1: _apply_degree_le1,
    Kind.ADJACENT_TWO_VERTICES: _apply_adjacent_two,
    Kind.FACE_LE3: _apply_face_le3,
    Kind.SEPARATING_CYCLE_LE5: _apply_separating_cycle,
    Kind.SIX_FACE: _apply_six_face,
    Kind.SMALL_FACE_WITH_TWO_VERTEX: _apply_small_face,
    Kind.TWO_VERTICES_CLOSE: _apply_two_close,
    Kind.EIGHT_FACE_TWO_TWO_VERTICES: _apply_eight_face,
    Kind.ADJACENT_FOUR_FACES: _apply_adjacent_four,
    Kind.FOUR_FIVE_LOW_DEGREE: _apply_four_five,
    Kind.FIVE_FIVE_LOW_DEGREE: _apply_five_five,
    Kind.FOUR_FACE_ALL_THREES: _apply_four_face_threes,
}


def apply(G: PlaneGraph, c: Configuration, check: bool = True) -> ReductionStep:
    """Perform the surgery of ``c``; every part is strictly smaller.  With
    ``check`` the configuration is first re-found in ``G``."""
    if check and not holds(G, c):
        raise PreconditionError(c.kind, f"{c.label} at {c.witness_ids()} is not present")
    try:
        step = _APPLY[c.kind](G, c)
    except EmbeddingError as exc:
        raise PreconditionError(c.kind, str(exc)) from exc
    for part in step.parts:
        if part.graph.size >= G.size:
            raise ReductionError(f"{c.kind}: reduced graph is not smaller")
    if step.inner is not None:
        _check_neighbourhoods(G, c, step.mid, step.mid_map, step.to_color)
    elif len(step.parts) == 1:
        _check_neighbourhoods(G, c, step.reduced, step.id_map, step.to_color)
    return step


def _check_neighbourhoods(G: PlaneGraph, c: Configuration, H: PlaneGraph, id_map, skip) -> None:
    # a coloring of H transports to G only if kept neighbours stay neighbours
    for e in G.edges():
        if e in skip:
            continue
        he = id_map[e]
        near = H.l_facial_neighborhood(he, ELL)
        for f in G.l_facial_neighborhood(e, ELL):
            if f not in skip and id_map[f] != he and id_map[f] not in near:
                raise PreconditionError(c.kind, f"edges {e} and {f} drift apart in the reduced graph")


# -- extension -------------------------------------------------------------------

# least list sizes promised for each configuration's residual edges; checked as diagnostics
EXPECTED_LISTS: dict[str, dict[str, int]] = {
    "AdjacentTwoVertices": {"uv": 2, "vw": 2},
    "FaceLE3(3)": {"e1": 3, "e2": 3, "e3": 3},
    "SixFace": {"v1v2": 2, "v2v3": 2, "v4v5": 2, "v5v6": 2},
    "SmallFaceWithTwoVertex(4)": {"uv": 2, "vw": 2},
    "SmallFaceWithTwoVertex(7)": {"uv": 3, "vw": 3, "wx1": 2, "x2x3": 2, "x3x4": 2},
    "TwoVerticesClose(2)": {"ux": 2, "vy": 2, "uw": 3, "vw": 3},
    "TwoVerticesClose(3)": {"ux": 1, "vy": 1, "uw": 2, "vz": 2},
    "EightFaceTwoTwoVertices": {"v3v4": 2, "v7v8": 2, "v1v2": 3, "v4v5": 3, "v5v6": 3, "v8v1": 3},
    "AdjacentFourFaces": {"e": 1},
    "FourFiveLowDegree": {"u1v1": 2, "vv2": 2, "v2w": 2, "uu1": 3, "uu2": 3, "uv": 6},
    "FiveFiveLowDegree": {"v1w1": 2, "u2w2": 2, "uu1": 3, "vv1": 3, "vv2": 3, "uu2": 3, "uv": 6},
    "FourFaceAllThrees": {
        "v1v2": 5, "v2v3": 5, "v3v4": 5, "v4v1": 5, "u1v1": 3, "u2v2": 3, "u3v3": 3, "u4v4": 3,
    },
}


@dataclass
class Trace:
    steps: list[str] = field(default_factory=list)
    kinds: list[str] = field(default_factory=list)
    detect_gaps: int = 0
    extension_failures: int = 0
    diagnostics: list[str] = field(default_factory=list)
    bespoke_used: int = 0

    def record(self, G: PlaneGraph, c: Configuration) -> None:
        n = len(self.steps) + 1
        self.kinds.append(c.label)
        self.steps.append(
            f"step {n} kind={c.label} witness={c.witness_ids()} |V|={G.n_vertices} |E|={G.n_edges}"
        )

    def text(self) -> str:
        return "".join(line + "\n" for line in self.steps)


def _transport(step_parts: Sequence[Part], colorings: Sequence[Coloring], skip) -> dict[int, int]:
    out: dict[int, int] = {}
    for part, phi in zip(step_parts, colorings):
        for old, new in part.id_map.items():
            if old in skip:
                continue
            if new in phi:
                out[old] = phi[new]
    return out


def _solve_residual(G: PlaneGraph, partial: dict[int, int], residual) -> dict[int, int] | None:
    m, lists = lists_from_partial(G, ELL, partial, residual, K)
    sol = l_color(ListGraph.from_medial(m, lists))
    if sol is None:
        return None
    out = dict(partial)
    out.update(sol)
    return out


def _diagnose(G: PlaneGraph, c: Configuration, partial: dict[int, int], residual, trace: Trace | None) -> None:
    expect = EXPECTED_LISTS.get(c.label)
    if trace is None or not expect:
        return
    _, lists = lists_from_partial(G, ELL, partial, residual, K)
    names = dict(c.edges)
    for name, need in expect.items():
        e = names.get(name)
        if e in lists and len(lists[e]) < need:
            trace.diagnostics.append(f"{c.label}: |L({name})|={len(lists[e])} < {need}")


def _bespoke_two_close(G: PlaneGraph, c: Configuration, partial: dict[int, int]) -> dict[int, int] | None:
    """Uncolor ``wz`` and reuse its color on ``ux`` and ``vz``."""
    wz = c.e("wz")
    if wz not in partial:
        return None
    residual = [c.e(n) for n in ("ux", "uw", "vz", "vy")]
    for e in residual:
        seen = [partial[f] for f in G.l_facial_neighborhood(e, ELL) if f in partial]
        if len(seen) != len(set(seen)):
            return None
    col = dict(partial)
    g = col.pop(wz)
    for name in ("ux", "vz"):
        e = c.e(name)
        if any(col.get(f) == g for f in G.l_facial_neighborhood(e, ELL)):
            return None
        col[e] = g
    for name in ("uw", "vy", "wz"):
        e = c.e(name)
        taken = {col[f] for f in G.l_facial_neighborhood(e, ELL) if f in col}
        free = sorted(set(range(1, K + 1)) - taken)
        if not free:
            return None
        col[e] = free[0]
    return col if not conflicts(G, ELL, col) else None


def _merge_by_permutation(
    G: PlaneGraph, phi1: dict[int, int], phi2: dict[int, int]
) -> dict[int, int] | None:
    """Permute the colors of ``phi2`` so that the union with ``phi1`` is a
    2-facial coloring of ``G``; shared edges must agree."""
    shared = set(phi1) & set(phi2)
    only2 = set(phi2) - shared
    only1 = set(phi1) - shared
    fixed: dict[int, int] = {}
    for e in shared:
        a, b = phi2[e], phi1[e]
        if fixed.get(a, b) != b:
            return None
        fixed[a] = b
    if len(set(fixed.values())) != len(fixed):
        return None
    forbid: dict[int, set[int]] = {}
    for f in only2:
        for e in G.l_facial_neighborhood(f, ELL):
            if e in only1:
                forbid.setdefault(phi2[f], set()).add(phi1[e])
    for a, b in fixed.items():
        if b in forbid.get(a, ()):
            return None
    free_src = sorted(c for c in set(phi2.values()) if c not in fixed)
    palette = list(range(1, K + 1))
    used = set(fixed.values())
    pi = dict(fixed)

    def assign(i: int) -> bool:
        if i == len(free_src):
            return True
        a = free_src[i]
        for b in palette:
            if b in used or b in forbid.get(a, ()):
                continue
            pi[a] = b
            used.add(b)
            if assign(i + 1):
                return True
            used.discard(b)
            del pi[a]
        return False

    if not assign(0):
        return None
    out = dict(phi1)
    out.update({e: pi[c] for e, c in phi2.items()})
    return out


def extend(
    G: PlaneGraph,
    step: ReductionStep,
    colorings: Sequence[Coloring] | Coloring,
    trace: Trace | None = None,
) -> Coloring:
    """Turn colorings of ``step.parts`` into a 2-facial 7-coloring of ``G``."""
    if isinstance(colorings, Coloring):
        colorings = [colorings]
    c = step.config
    if step.inner is not None:
        assert step.mid is not None and step.mid_map is not None
        mid_col = extend(step.mid, step.inner, colorings, trace)
        parts = [Part(step.mid, step.mid_map)]
        colorings = [mid_col]
    else:
        parts = step.parts
    if len(parts) == 2:
        phi1 = _transport([parts[0]], [colorings[0]], ())
        phi2 = _transport([parts[1]], [colorings[1]], ())
        merged = _merge_by_permutation(G, phi1, phi2)
        if merged is None:
            raise ExtensionFailed(f"{c.label}: no color permutation joins the parts", G, step)
        return _finish(G, step, merged)
    partial = _transport(parts, colorings, step.to_color)
    bad = conflicts(G, ELL, partial)
    if bad:
        raise ExtensionFailed(f"{c.label}: transported coloring has conflicts {bad[:3]}", G, step, partial)
    for e, f in step.same_color:
        if partial.get(e) != partial.get(f):
            raise ExtensionFailed(f"{c.label}: identified edges {e}, {f} differ", G, step, partial)
    _diagnose(G, c, partial, step.to_color, trace)
    result = None
    if c.kind is Kind.TWO_VERTICES_CLOSE and c.case == 3:
        m, lists = lists_from_partial(G, ELL, partial, step.to_color, K)
        if len(core(ListGraph.from_medial(m, lists))) > 0:
            result = _bespoke_two_close(G, c, partial)
            if result is not None and trace is not None:
                trace.bespoke_used += 1
            if result is None:
                reduced = {e: x for e, x in partial.items() if e != c.e("wz")}
                result = _solve_residual(G, reduced, set(step.to_color) | {c.e("wz")})
    if result is None:
        result = _solve_residual(G, partial, step.to_color)
    if result is None:
        raise ExtensionFailed(f"{c.label}: residual list coloring has no solution", G, step, partial)
    return _finish(G, step, result)


def _finish(G: PlaneGraph, step: ReductionStep, col: dict[int, int]) -> Coloring:
    phi = Coloring(col, K)
    missing = [e for e in G.edges() if e not in col]
    if missing or verify(G, ELL, phi):
        raise ExtensionFailed(f"{step.config.label}: extended coloring does not verify", G, step, col)
    return phi


# -- driver ------------------------------------------------------------------------


def _base(G: PlaneGraph) -> Coloring:
    phi = exact.is_k_colorable(G, ELL, K)
    if phi is None:
        raise ExtensionFailed("base graph has no 2-facial 7-coloring", G)
    return phi


def construct_7_coloring(
    G: PlaneGraph, base_edges: int = BASE_EDGES, trace: Trace | None = None
) -> tuple[Coloring, Trace]:
    """2-facial edge coloring of ``G`` with at most 7 colors plus the trace
    of configurations reduced on the way."""
    if trace is None:
        trace = Trace()

    def solve(H: PlaneGraph) -> Coloring:
        comps = H.components()
        if len(comps) > 1:
            out: dict[int, int] = {}
            for comp in comps:
                sub = embed.subgraph(H, [e for e in H.edges() if H.endpoints(e)[0] in comp], comp)
                out.update(solve(sub).assignment)
            return Coloring(out, K)
        if H.n_edges <= base_edges:
            return _base(H)
        found = _first_step(H)
        if found is None:
            trace.detect_gaps += 1
            trace.steps.append(f"gap |V|={H.n_vertices} |E|={H.n_edges}")
            log.warning("no reducible configuration in a graph with %d edges", H.n_edges)
            return _base(H)
        c, step = found
        trace.record(H, c)
        sub = [solve(p.graph) for p in step.parts]
        try:
            return extend(H, step, sub, trace)
        except ExtensionFailed:
            trace.extension_failures += 1
            raise

    return solve(G), trace
