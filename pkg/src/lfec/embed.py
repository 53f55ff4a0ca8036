"""Dart-based plane multigraphs.

A plane graph is stored as a rotation system: every edge owns two darts
(``twin`` pairs them) and every vertex owns the cyclic list of darts leaving
it (``sigma`` maps a dart to the next one around its vertex).  Faces are the
orbits of ``phi = sigma . twin``: a facial walk enters the head of a dart
through its twin and leaves along the next dart of the rotation.

Loops and parallel edges are allowed.  Isolated vertices have an empty
rotation.  Graph values are never mutated; all surgeries return new graphs
and keep the ids of surviving vertices, edges and darts.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class EmbeddingError(ValueError):
    """Invalid rotation system or violated surgery precondition."""

    def __init__(self, message: str, dart: int | None = None):
        super().__init__(message)
        self.dart = dart


@dataclass(frozen=True)
class FaceWalk:
    face: int
    darts: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class Cycle:
    """A simple cycle given by its darts in traversal order.

    ``left`` and ``right`` hold the vertices strictly on either side; the
    left side is the one the facial walks of the cycle darts lie on.
    """

    darts: tuple[int, ...]
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    left: frozenset[int] = field(default=frozenset())
    right: frozenset[int] = field(default=frozenset())

    def __len__(self) -> int:
        return len(self.darts)

    @property
    def separating(self) -> bool:
        return bool(self.left) and bool(self.right)


class PlaneGraph:
    """Immutable plane multigraph given by per-vertex rotations.

    ``rotations`` maps a vertex id to the darts leaving it in cyclic order;
    ``edges`` maps an edge id to its pair of darts.
    """

    __slots__ = ("_rot", "_edges", "_twin", "_sigma", "_vertex_of", "_edge_of", "__dict__")

    def __init__(self, rotations: Mapping[int, Sequence[int]], edges: Mapping[int, Sequence[int]]):
        rot = {int(v): tuple(int(d) for d in ds) for v, ds in rotations.items()}
        twin: dict[int, int] = {}
        edge_of: dict[int, int] = {}
        edge_tab: dict[int, tuple[int, int]] = {}
        for e, pair in edges.items():
            a, b = (int(x) for x in pair)
            if a == b:
                raise EmbeddingError(f"edge {e}: dart {a} paired with itself", a)
            for d in (a, b):
                if d in edge_of:
                    raise EmbeddingError(f"dart {d} belongs to edges {edge_of[d]} and {e}", d)
                edge_of[d] = int(e)
            twin[a], twin[b] = b, a
            edge_tab[int(e)] = (a, b)
        sigma: dict[int, int] = {}
        vertex_of: dict[int, int] = {}
        for v, ds in rot.items():
            for i, d in enumerate(ds):
                if d in vertex_of:
                    raise EmbeddingError(f"dart {d} appears in rotations of {vertex_of[d]} and {v}", d)
                if d not in edge_of:
                    raise EmbeddingError(f"dart {d} at vertex {v} belongs to no edge", d)
                vertex_of[d] = v
                sigma[d] = ds[(i + 1) % len(ds)]
        for d in edge_of:
            if d not in vertex_of:
                raise EmbeddingError(f"dart {d} of edge {edge_of[d]} is in no rotation", d)
        self._rot = rot
        self._edges = edge_tab
        self._twin = twin
        self._sigma = sigma
        self._vertex_of = vertex_of
        self._edge_of = edge_of

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_neighbor_rotations(cls, adjacency: Mapping[int, Sequence[int]]) -> "PlaneGraph":
        """Build a simple plane graph from cyclic neighbour lists.

        Edge ids are assigned in order of first appearance ``(u, v)`` with
        ``u < v``; the dart leaving ``u`` is ``2 e`` and the one leaving ``v``
        is ``2 e + 1``.
        """
        eid: dict[tuple[int, int], int] = {}
        for u in sorted(adjacency):
            for v in adjacency[u]:
                key = (min(u, v), max(u, v))
                if u == v:
                    raise EmbeddingError(f"loop at {u} not allowed in neighbour form")
                if key not in eid:
                    eid[key] = len(eid)
        for (u, v) in eid:
            if u not in adjacency[v] or v not in adjacency[u]:
                raise EmbeddingError(f"edge {u}-{v} is not symmetric")
        rotations = {}
        for u, nbrs in adjacency.items():
            if len(set(nbrs)) != len(nbrs):
                raise EmbeddingError(f"repeated neighbour at {u}")
            rotations[u] = [2 * eid[(min(u, v), max(u, v))] + (0 if u < v else 1) for v in nbrs]
        edges = {e: (2 * e, 2 * e + 1) for e in eid.values()}
        return cls(rotations, edges)

    # -- basic accessors --------------------------------------------------

    def vertices(self) -> list[int]:
        return sorted(self._rot)

    def edges(self) -> list[int]:
        return sorted(self._edges)

    def darts(self) -> list[int]:
        return sorted(self._twin)

    @property
    def n_vertices(self) -> int:
        return len(self._rot)

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    @property
    def size(self) -> int:
        return len(self._rot) + len(self._edges)

    @property
    def n_faces(self) -> int:
        # an isolated vertex bounds one face of its own component
        return len(self.faces) + sum(1 for ds in self._rot.values() if not ds)

    def has_vertex(self, v: int) -> bool:
        return v in self._rot

    def has_edge(self, e: int) -> bool:
        return e in self._edges

    def twin(self, d: int) -> int:
        return self._twin[d]

    def sigma(self, d: int) -> int:
        return self._sigma[d]

    def phi(self, d: int) -> int:
        return self._sigma[self._twin[d]]

    def vertex_of(self, d: int) -> int:
        return self._vertex_of[d]

    def head(self, d: int) -> int:
        return self._vertex_of[self._twin[d]]

    def edge_of(self, d: int) -> int:
        return self._edge_of[d]

    def edge_darts(self, e: int) -> tuple[int, int]:
        self._check_edge(e)
        return self._edges[e]

    def rotation(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._rot[v]

    def rotations(self) -> dict[int, tuple[int, ...]]:
        return dict(self._rot)

    def edge_table(self) -> dict[int, tuple[int, int]]:
        return dict(self._edges)

    def endpoints(self, e: int) -> tuple[int, int]:
        a, b = self.edge_darts(e)
        return self._vertex_of[a], self._vertex_of[b]

    def other_end(self, e: int, v: int) -> int:
        a, b = self.endpoints(e)
        return b if a == v else a

    def is_loop(self, e: int) -> bool:
        a, b = self.endpoints(e)
        return a == b

    def degree(self, v: int) -> int:
        return len(self.rotation(v))

    def neighbors(self, v: int) -> list[int]:
        return [self.head(d) for d in self.rotation(v)]

    def incident_edges(self, v: int) -> list[int]:
        return [self._edge_of[d] for d in self.rotation(v)]

    def edges_between(self, u: int, v: int) -> list[int]:
        return sorted({self._edge_of[d] for d in self.rotation(u) if self.head(d) == v})

    def adjacent(self, u: int, v: int) -> bool:
        return any(self.head(d) == v for d in self.rotation(u))

    def _check_edge(self, e: int) -> None:
        if e not in self._edges:
            raise KeyError(f"unknown edge {e}")

    def _check_vertex(self, v: int) -> None:
        if v not in self._rot:
            raise KeyError(f"unknown vertex {v}")

    # -- faces ------------------------------------------------------------

    @cached_property
    def faces(self) -> tuple[FaceWalk, ...]:
        seen: set[int] = set()
        walks = []
        for d0 in sorted(self._twin):
            if d0 in seen:
                continue
            walk = []
            d = d0
            while d not in seen:
                seen.add(d)
                walk.append(d)
                d = self.phi(d)
            walks.append(FaceWalk(len(walks), tuple(walk)))
        return tuple(walks)

    @cached_property
    def _face_of(self) -> dict[int, int]:
        return {d: f.face for f in self.faces for d in f.darts}

    def face_of(self, d: int) -> int:
        return self._face_of[d]

    def face_edges(self, face: int) -> list[int]:
        return [self._edge_of[d] for d in self.faces[face].darts]

    def face_vertices(self, face: int) -> list[int]:
        return [self._vertex_of[d] for d in self.faces[face].darts]

    def face_length(self, face: int) -> int:
        return len(self.faces[face].darts)

    def corner_faces(self, v: int) -> list[int]:
        """Faces at the corners of ``v`` in rotation order (with multiplicity)."""
        return [self._face_of[d] for d in self.rotation(v)]

    def edge_faces(self, e: int) -> tuple[int, int]:
        a, b = self.edge_darts(e)
        return self._face_of[a], self._face_of[b]

    @cached_property
    def _positions(self) -> dict[int, list[tuple[int, int]]]:
        pos: dict[int, list[tuple[int, int]]] = {e: [] for e in self._edges}
        for f in self.faces:
            for i, d in enumerate(f.darts):
                pos[self._edge_of[d]].append((f.face, i))
        return pos

    def facial_distance(self, e: int, f: int) -> float:
        """Least cyclic step distance between occurrences of ``e`` and ``f``
        on a common facial walk; ``math.inf`` when no walk holds both."""
        self._check_edge(e)
        self._check_edge(f)
        if e == f:
            raise ValueError("facial distance needs two distinct edges")
        best = math.inf
        for fe, i in self._positions[e]:
            length = len(self.faces[fe].darts)
            for ff, j in self._positions[f]:
                if ff == fe:
                    step = abs(i - j)
                    best = min(best, step, length - step)
        return best

    def _facial_neighbors(self, ell: int) -> dict[int, frozenset[int]]:
        cache = self.__dict__.setdefault("_nbr_cache", {})
        if ell not in cache:
            nbrs: dict[int, set[int]] = {e: set() for e in self._edges}
            for walk in self.faces:
                es = [self._edge_of[d] for d in walk.darts]
                n = len(es)
                for i, e in enumerate(es):
                    for s in range(1, ell + 1):
                        f = es[(i + s) % n]
                        if f != e:
                            nbrs[e].add(f)
                            nbrs[f].add(e)
            cache[ell] = {e: frozenset(s) for e, s in nbrs.items()}
        return cache[ell]

    def l_facial_neighborhood(self, e: int, ell: int) -> frozenset[int]:
        self._check_edge(e)
        if ell < 1:
            raise ValueError("ell must be at least 1")
        return self._facial_neighbors(ell)[e]

    # -- global structure --------------------------------------------------

    def components(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        comps = []
        for s in sorted(self._rot):
            if s in seen:
                continue
            comp = {s}
            queue = deque([s])
            seen.add(s)
            while queue:
                v = queue.popleft()
                for d in self._rot[v]:
                    w = self.head(d)
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        queue.append(w)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    def __repr__(self) -> str:
        return f"PlaneGraph(V={self.n_vertices}, E={self.n_edges}, F={self.n_faces})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def canonical_key(self) -> tuple:
        rot = tuple(sorted((v, _from_least(ds)) for v, ds in self._rot.items()))
        return rot, tuple(sorted(self._edges.items()))


def _from_least(ds: Sequence[int]) -> tuple[int, ...]:
    if not ds:
        return ()
    i = min(range(len(ds)), key=ds.__getitem__)
    return tuple(ds[i:]) + tuple(ds[:i])


def _after(ds: Sequence[int], d: int) -> list[int]:
    """Darts of a rotation following ``d`` cyclically, ``d`` itself excluded."""
    i = ds.index(d)
    return list(ds[i + 1:]) + list(ds[:i])


def _starting(ds: Sequence[int], d: int) -> list[int]:
    i = ds.index(d)
    return list(ds[i:]) + list(ds[:i])


# -- free-function operations ---------------------------------------------------


def build_from_rotation(rotations: Mapping[int, Sequence[int]], edges: Mapping[int, Sequence[int]]) -> PlaneGraph:
    return PlaneGraph(rotations, edges)


def faces(G: PlaneGraph) -> list[FaceWalk]:
    return list(G.faces)


def facial_distance(G: PlaneGraph, e: int, f: int) -> float:
    return G.facial_distance(e, f)


def l_facial_neighborhood(G: PlaneGraph, e: int, ell: int) -> frozenset[int]:
    return G.l_facial_neighborhood(e, ell)


def subgraph(G: PlaneGraph, edges: Iterable[int], vertices: Iterable[int] = ()) -> PlaneGraph:
    """Restriction of the embedding to ``edges`` plus their endpoints and
    any extra ``vertices``."""
    keep = set(edges)
    for e in keep:
        G._check_edge(e)
    verts = set(vertices)
    for e in keep:
        verts.update(G.endpoints(e))
    table = G.edge_table()
    rot = {v: [d for d in G.rotation(v) if G.edge_of(d) in keep] for v in verts}
    return PlaneGraph(rot, {e: table[e] for e in keep})


def delete_edge(G: PlaneGraph, e: int) -> PlaneGraph:
    G._check_edge(e)
    return subgraph(G, [x for x in G.edges() if x != e], G.vertices())


def delete_edges(G: PlaneGraph, es: Iterable[int]) -> PlaneGraph:
    drop = set(es)
    for e in drop:
        G._check_edge(e)
    return subgraph(G, [x for x in G.edges() if x not in drop], G.vertices())


def delete_vertex(G: PlaneGraph, v: int) -> PlaneGraph:
    return delete_vertices(G, [v])


def delete_vertices(G: PlaneGraph, vs: Iterable[int]) -> PlaneGraph:
    drop = set(vs)
    for v in drop:
        G._check_vertex(v)
    edges = [e for e in G.edges() if not (set(G.endpoints(e)) & drop)]
    return subgraph(G, edges, [v for v in G.vertices() if v not in drop])


def add_edge(G: PlaneGraph, face: int, i: int, j: int) -> tuple[PlaneGraph, int]:
    """Draw a new edge inside ``face`` between the corners before walk
    positions ``i`` and ``j``; ``i == j`` gives a loop bounding an empty
    face.  Returns the new graph and the new edge id."""
    walk = G.faces[face].darts
    n = len(walk)
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"walk positions must lie in [0, {n})")
    e = max(G.edges(), default=-1) + 1
    a = max(G.darts(), default=-1) + 1
    b = a + 1
    rot = {v: list(G.rotation(v)) for v in G.vertices()}

    def put(pos: int, d: int) -> None:
        # the corner entered by walk[pos - 1] and left by walk[pos]
        out = walk[pos]
        ds = rot[G.vertex_of(out)]
        ds.insert(ds.index(out), d)

    if i == j:
        put(i, b)
        put(i, a)
    else:
        put(i, a)
        put(j, b)
    table = dict(G.edge_table())
    table[e] = (a, b)
    return PlaneGraph(rot, table), e


def _common_face_dart(G: PlaneGraph, e: int, f: int, face: int | None):
    """Darts of ``e`` and ``f`` lying on one common facial walk."""
    for walk in G.faces:
        if face is not None and walk.face != face:
            continue
        de = [d for d in walk.darts if G.edge_of(d) == e]
        df = [d for d in walk.darts if G.edge_of(d) == f]
        if de and df:
            if len(de) > 1 or len(df) > 1:
                raise EmbeddingError(f"edge traversed twice by face {walk.face}")
            return de[0], df[0]
    raise EmbeddingError(f"edges {e} and {f} are not co-facial")


def identify_edges(
    G: PlaneGraph,
    e: int,
    f: int,
    orientation: Mapping[int, int] | None = None,
    face: int | None = None,
) -> tuple[PlaneGraph, dict[int, int]]:
    """Glue edge ``e`` onto edge ``f`` across a common face.

    The face is folded so that the two edges, traversed in opposite
    directions by the walk, become one edge: if the walk uses ``e`` as
    ``x -> y`` and ``f`` as ``z -> w`` then ``y`` merges into ``z`` and ``x``
    into ``w``.  ``orientation`` (``e``-endpoint -> ``f``-endpoint) is checked
    against that rule.  Returns the new graph and the old -> new edge map.
    """
    G._check_edge(e)
    G._check_edge(f)
    if e == f:
        raise EmbeddingError("cannot identify an edge with itself")
    ends = set(G.endpoints(e)) | set(G.endpoints(f))
    if len(ends) != 4:
        raise EmbeddingError(f"edges {e} and {f} do not have four distinct endpoints")
    de, df = _common_face_dart(G, e, f, face)
    x, y = G.vertex_of(de), G.head(de)
    z, w = G.vertex_of(df), G.head(df)
    if orientation is not None and dict(orientation) != {y: z, x: w}:
        raise EmbeddingError(
            f"orientation {dict(orientation)} disagrees with the face; expected {{{y}: {z}, {x}: {w}}}"
        )
    rot = G.rotations()
    merged_z = [df] + _after(rot[z], df) + _after(rot[y], G.twin(de))
    merged_w = [G.twin(df)] + _after(rot[x], de) + _after(rot[w], G.twin(df))
    new_rot = {v: list(ds) for v, ds in rot.items() if v not in (x, y, z, w)}
    new_rot[z] = merged_z
    new_rot[w] = merged_w
    table = G.edge_table()
    del table[e]
    id_map = {g: g for g in G.edges()}
    id_map[e] = f
    return PlaneGraph(new_rot, table), id_map


def _first_dart_from(G: PlaneGraph, walk: FaceWalk, v: int) -> int | None:
    for d in walk.darts:
        if G.vertex_of(d) == v:
            return d
    return None


def identify_vertices(G: PlaneGraph, u: int, v: int, face: int | None = None) -> PlaneGraph:
    """Merge non-adjacent ``v`` into ``u`` by pinching a common face.

    The merged rotation is ``u``'s rotation starting at the dart by which
    the walk leaves ``u`` followed by ``v``'s starting likewise, so the face
    splits into the two walks between the corners.
    """
    G._check_vertex(u)
    G._check_vertex(v)
    if u == v:
        raise EmbeddingError("cannot identify a vertex with itself")
    if G.adjacent(u, v):
        raise EmbeddingError(f"vertices {u} and {v} are adjacent")
    for walk in G.faces:
        if face is not None and walk.face != face:
            continue
        du, dv = _first_dart_from(G, walk, u), _first_dart_from(G, walk, v)
        if du is not None and dv is not None:
            break
    else:
        raise EmbeddingError(f"vertices {u} and {v} are not co-facial")
    rot = G.rotations()
    new_rot = {w: list(ds) for w, ds in rot.items() if w not in (u, v)}
    new_rot[u] = _starting(rot[u], du) + _starting(rot[v], dv)
    return PlaneGraph(new_rot, G.edge_table())


def contract_face(G: PlaneGraph, face: int) -> PlaneGraph:
    """Remove the three edges of a triangular face and merge its corners."""
    walk = G.faces[face]
    if len(walk) != 3:
        raise EmbeddingError(f"face {face} has length {len(walk)}, expected 3")
    d1, d2, d3 = walk.darts
    u, v, w = (G.vertex_of(d) for d in walk.darts)
    if len({u, v, w}) != 3:
        raise EmbeddingError(f"face {face} does not have three distinct corners")
    rot = G.rotations()
    # around each corner the triangle occupies the gap (twin(in), out)
    xu = _after(rot[u], d1)[:-1]
    xv = _after(rot[v], d2)[:-1]
    xw = _after(rot[w], d3)[:-1]
    drop = {G.edge_of(d) for d in walk.darts}
    dropped_darts = {d for e in drop for d in G.edge_darts(e)}
    merged = [d for d in xu + xw + xv if d not in dropped_darts]
    new_rot = {x: list(ds) for x, ds in rot.items() if x not in (u, v, w)}
    new_rot[u] = merged
    table = {e: p for e, p in G.edge_table().items() if e not in drop}
    return PlaneGraph(new_rot, table)


# -- cycles -----------------------------------------------------------------


def _cycle_sides(G: PlaneGraph, darts: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
    on_cycle = {G.vertex_of(d) for d in darts}
    cyc_darts = {x for d in darts for x in (d, G.twin(d))}
    comp_of: dict[int, int] = {}
    comps: list[set[int]] = []
    for s in G.vertices():
        if s in on_cycle or s in comp_of:
            continue
        idx = len(comps)
        comp = {s}
        comp_of[s] = idx
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for d in G.rotation(x):
                y = G.head(d)
                if y not in on_cycle and y not in comp_of:
                    comp_of[y] = idx
                    comp.add(y)
                    queue.append(y)
        comps.append(comp)
    side: dict[int, str] = {}
    for i, out in enumerate(darts):
        inc = G.twin(darts[i - 1])
        rot = G.rotation(G.vertex_of(out))
        left = _after(rot, inc)
        left = left[: left.index(out)]
        right = [d for d in _after(rot, out) if d not in left and d != inc]
        for label, group in (("L", left), ("R", right)):
            for d in group:
                if d in cyc_darts:
                    continue
                y = G.head(d)
                if y in comp_of:
                    side.setdefault(comp_of[y], label)
    left_v = frozenset(v for c, lab in side.items() if lab == "L" for v in comps[c])
    right_v = frozenset(v for c, lab in side.items() if lab == "R" for v in comps[c])
    return left_v, right_v


def cycles_up_to(G: PlaneGraph, max_len: int) -> list[Cycle]:
    """All simple cycles of length ``<= max_len``, each reported once.

    A cycle starts at its least vertex and is traversed in the direction
    whose first edge id is smaller than its last.
    """
    found: list[tuple[int, ...]] = []

    def extend(s: int, v: int, path: list[int], used_v: set[int]) -> None:
        for d in G.rotation(v):
            w = G.head(d)
            if w == v:
                continue
            if path and G.edge_of(d) == G.edge_of(path[-1]):
                continue
            if w == s and path:
                cyc = path + [d]
                if G.edge_of(cyc[0]) < G.edge_of(cyc[-1]):
                    found.append(tuple(cyc))
                continue
            if w < s or w in used_v or len(path) + 1 >= max_len:
                continue
            used_v.add(w)
            path.append(d)
            extend(s, w, path, used_v)
            path.pop()
            used_v.discard(w)

    for s in G.vertices():
        if max_len >= 1:
            found.extend((d,) for d in G.rotation(s) if G.head(d) == s and d < G.twin(d))
        if max_len >= 2:
            extend(s, s, [], {s})
    out = []
    for darts in found:
        left, right = _cycle_sides(G, darts)
        out.append(
            Cycle(
                darts=darts,
                vertices=tuple(G.vertex_of(d) for d in darts),
                edges=tuple(G.edge_of(d) for d in darts),
                left=left,
                right=right,
            )
        )
    out.sort(key=lambda c: (len(c), c.darts))
    return out


def separating_cycles_up_to(G: PlaneGraph, max_len: int) -> list[Cycle]:
    return [c for c in cycles_up_to(G, max_len) if c.separating]


# -- medial graph ---------------------------------------------------------------


def medial_graph(G: PlaneGraph) -> PlaneGraph:
    """Plane medial graph: one vertex per edge of ``G`` (same id), one edge
    per facial corner joining the two edges consecutive there.

    The edge for the corner entered by dart ``d`` has id ``d`` and darts
    ``2 d`` (at ``edge_of(d)``) and ``2 d + 1`` (at ``edge_of(phi(d))``).
    """
    if G.n_edges == 0:
        raise EmbeddingError("medial graph of an edgeless graph is undefined")
    inv_phi = {G.phi(d): d for d in G.darts()}
    rot = {}
    for e in G.edges():
        a, b = G.edge_darts(e)
        rot[e] = [2 * a, 2 * inv_phi[b] + 1, 2 * b, 2 * inv_phi[a] + 1]
    table = {d: (2 * d, 2 * d + 1) for d in G.darts()}
    return PlaneGraph(rot, table)


# -- blocks -------------------------------------------------------------------------


def blocks(G: PlaneGraph) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Blocks as ``(vertices, edges)``; loops and isolated vertices form
    their own blocks."""
    out: list[tuple[frozenset[int], frozenset[int]]] = []
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    counter = 0
    for root in G.vertices():
        if root in disc:
            continue
        if G.degree(root) == 0:
            out.append((frozenset([root]), frozenset()))
            disc[root] = low[root] = counter
            counter += 1
            continue
        disc[root] = low[root] = counter
        counter += 1
        edge_stack: list[int] = []
        # frames: (vertex, edge used to enter, iterator over rotation)
        frames = [(root, None, iter(G.rotation(root)))]
        while frames:
            v, via, it = frames[-1]
            advanced = False
            for d in it:
                e = G.edge_of(d)
                w = G.head(d)
                if w == v or e == via:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append(e)
                    frames.append((w, e, iter(G.rotation(w))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            frames.pop()
            if frames:
                p = frames[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    es = set()
                    while True:
                        x = edge_stack.pop()
                        es.add(x)
                        if x == via:
                            break
                    vs = {u for x in es for u in G.endpoints(x)}
                    out.append((frozenset(vs), frozenset(es)))
    for e in G.edges():
        if G.is_loop(e):
            out.append((frozenset(G.endpoints(e)), frozenset([e])))
    out.sort(key=lambda b: (min(b[1]) if b[1] else -1, min(b[0])))
    return out


def cut_vertices(G: PlaneGraph) -> list[int]:
    count: dict[int, int] = {}
    for vs, _ in blocks(G):
        for v in vs:
            count[v] = count.get(v, 0) + 1
    return sorted(v for v, c in count.items() if c > 1)


def is_2_connected(G: PlaneGraph) -> bool:
    if not G.is_connected() or G.n_vertices < 2:
        return False
    if G.n_vertices == 2 and G.n_edges < 2:
        return False
    return len(blocks(G)) == 1
