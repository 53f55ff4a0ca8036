"""Graph generators and the ``.pg`` / ``.col`` text formats."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .embed import EmbeddingError, PlaneGraph
from .facial import Coloring

FAMILIES = (
    "cycle",
    "wheel",
    "prism",
    "cube",
    "dodecahedron",
    "octahedron",
    "tight_family",
    "subdivided_k4",
    "random_planar",
    "random_multigraph",
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: Mapping[str, int] = field(default_factory=dict)


# -- drawings ---------------------------------------------------------------------


def from_drawing(coords: Mapping[int, tuple[float, float]], edges: Sequence[tuple[int, int]]) -> PlaneGraph:
    """Simple plane graph from a straight-line drawing: neighbours are
    ordered counter-clockwise by angle."""
    nbrs: dict[int, list[int]] = {v: [] for v in coords}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rot = {}
    for v, ns in nbrs.items():
        x, y = coords[v]
        rot[v] = sorted(ns, key=lambda w: math.atan2(coords[w][1] - y, coords[w][0] - x))
    return PlaneGraph.from_neighbor_rotations(rot)


def _ring(n: int, radius: float, offset: float = 0.0) -> list[tuple[float, float]]:
    return [
        (radius * math.cos(offset + 2 * math.pi * i / n), radius * math.sin(offset + 2 * math.pi * i / n))
        for i in range(n)
    ]


def cycle(n: int) -> PlaneGraph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    pts = _ring(n, 1.0)
    return from_drawing(dict(enumerate(pts)), [(i, (i + 1) % n) for i in range(n)])


def wheel(n: int) -> PlaneGraph:
    """Hub ``0`` joined to a rim cycle ``1..n``."""
    if n < 3:
        raise ValueError("wheel needs n >= 3")
    coords = {0: (0.0, 0.0)}
    coords.update({i + 1: p for i, p in enumerate(_ring(n, 1.0))})
    edges = [(0, i + 1) for i in range(n)] + [(i + 1, (i + 1) % n + 1) for i in range(n)]
    return from_drawing(coords, edges)


def prism(n: int) -> PlaneGraph:
    if n < 3:
        raise ValueError("prism needs n >= 3")
    coords = {i: p for i, p in enumerate(_ring(n, 2.0))}
    coords.update({n + i: p for i, p in enumerate(_ring(n, 1.0))})
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return from_drawing(coords, edges)


def cube() -> PlaneGraph:
    return prism(4)


def octahedron() -> PlaneGraph:
    outer = _ring(3, 3.0, math.pi / 2)
    inner = _ring(3, 1.0, math.pi / 2 + math.pi / 3)
    coords = {i: outer[i] for i in range(3)}
    coords.update({3 + i: inner[i] for i in range(3)})
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    # inner vertex i sits between outer i and i+1
    edges += [(3 + i, i) for i in range(3)] + [(3 + i, (i + 1) % 3) for i in range(3)]
    return from_drawing(coords, edges)


def dodecahedron() -> PlaneGraph:
    outer = _ring(5, 3.0, math.pi / 2)
    middle = _ring(10, 2.0, math.pi / 2)
    inner = _ring(5, 1.0, math.pi / 2 + math.pi / 5)
    coords = {i: outer[i] for i in range(5)}
    coords.update({5 + i: middle[i] for i in range(10)})
    coords.update({15 + i: inner[i] for i in range(5)})
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 1) % 10) for i in range(10)]
    edges += [(15 + i, 15 + (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + 2 * i) for i in range(5)] + [(15 + i, 5 + 2 * i + 1) for i in range(5)]
    return from_drawing(coords, edges)


def subdivided_k4(ell: int) -> PlaneGraph:
    """K4 (centre ``0``, outer triangle ``1, 2, 3``) whose three edges at the
    centre are each subdivided ``ell - 1`` times."""
    if ell < 1:
        raise ValueError("ell must be at least 1")
    outer = _ring(3, 3.0, math.pi / 2)
    coords = {0: (0.0, 0.0), 1: outer[0], 2: outer[1], 3: outer[2]}
    edges = [(1, 2), (2, 3), (3, 1)]
    nxt = 4
    for j in range(3):
        prev = 0
        for s in range(1, ell):
            t = s / ell
            coords[nxt] = (outer[j][0] * t, outer[j][1] * t)
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, j + 1))
    return from_drawing(coords, edges)


def theta(lengths: Sequence[int]) -> PlaneGraph:
    """Two poles ``0`` and ``1`` joined by internally disjoint paths with the
    given numbers of edges, embedded in the listed cyclic order."""
    if len(lengths) < 2 or min(lengths) < 1:
        raise ValueError("theta needs at least two paths of length >= 1")
    rot: dict[int, list[int]] = {0: [], 1: []}
    table: dict[int, tuple[int, int]] = {}
    nxt_v, nxt_e = 2, 0
    for length in lengths:
        prev = 0
        for step in range(length):
            v = 1 if step == length - 1 else nxt_v
            if v != 1:
                nxt_v += 1
                rot[v] = []
            a, b = 2 * nxt_e, 2 * nxt_e + 1
            table[nxt_e] = (a, b)
            nxt_e += 1
            rot[prev].append(a)
            rot[v].append(b)
            prev = v
    rot[1].reverse()
    return PlaneGraph(rot, table)


def tight_family(ell: int) -> PlaneGraph:
    """Theta graph with paths of ``ell``, ``ell`` and ``ell + 1`` edges.

    Its faces have lengths ``2 ell``, ``2 ell + 1`` and ``2 ell + 1`` and
    every two edges share one of them, so all ``3 ell + 1`` edges are
    pairwise ``ell``-facial neighbours.  For ``ell = 1`` it has a pair of
    parallel edges.
    """
    if ell < 1:
        raise ValueError("ell must be at least 1")
    return theta([ell, ell, ell + 1])


# -- random plane graphs ----------------------------------------------------------


def _random_triangulation(n: int, rng: random.Random, flips: int) -> dict[int, list[int]]:
    # cyclic neighbour lists; face (u, v, w) means w follows u in v's list
    nb: dict[int, list[int]] = {0: [1, 2], 1: [2, 0], 2: [0, 1]}

    def succ(v: int, u: int) -> int:
        ns = nb[v]
        return ns[(ns.index(u) + 1) % len(ns)]

    def insert_after(v: int, u: int, x: int) -> None:
        ns = nb[v]
        ns.insert(ns.index(u) + 1, x)

    for x in range(3, n):
        u = rng.randrange(x)
        v = rng.choice(nb[u])
        w = succ(v, u)
        # (u, v, w) is a face: w = succ_v(u), u = succ_w(v), v = succ_u(w)
        insert_after(v, u, x)
        insert_after(w, v, x)
        insert_after(u, w, x)
        nb[x] = [v, u, w]
    for _ in range(flips):
        u = rng.randrange(n)
        v = rng.choice(nb[u])
        a = succ(v, u)
        b = succ(u, v)
        if a == b or b in nb[a] or len(nb[u]) <= 3 or len(nb[v]) <= 3:
            continue
        nb[u].remove(v)
        nb[v].remove(u)
        insert_after(a, v, b)
        insert_after(b, u, a)
    return nb


def _connected(nb: Mapping[int, list[int]]) -> bool:
    start = next(iter(nb))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in nb[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(nb)


def random_planar(n: int, seed: int, edges: int | None = None, flips: int | None = None) -> PlaneGraph:
    """Random connected simple plane graph on ``n`` vertices.

    A random triangulation is grown by vertex insertion into random faces and
    mixed by random edge flips; edges are then deleted in random order while
    connectivity holds, down to ``edges`` edges (random when omitted).
    """
    if n < 3:
        raise ValueError("random_planar needs n >= 3")
    rng = random.Random(seed)
    nb = _random_triangulation(n, rng, 4 * n if flips is None else flips)
    m_max = sum(len(x) for x in nb.values()) // 2
    if edges is None:
        edges = rng.randint(n - 1, m_max)
    if not n - 1 <= edges <= m_max:
        raise ValueError(f"edge count must lie in [{n - 1}, {m_max}]")
    pairs = sorted({(min(u, v), max(u, v)) for u in nb for v in nb[u]})
    rng.shuffle(pairs)
    m = m_max
    for u, v in pairs:
        if m <= edges:
            break
        iu, iv = nb[u].index(v), nb[v].index(u)
        del nb[u][iu]
        del nb[v][iv]
        if _connected(nb):
            m -= 1
        else:
            nb[u].insert(iu, v)
            nb[v].insert(iv, u)
    return PlaneGraph.from_neighbor_rotations(nb)



def random_multigraph(n: int, seed: int, edges: int | None = None, extra: int | None = None) -> PlaneGraph:
    """:func:`random_planar` plus ``extra`` edges drawn across random faces
    between random corners, which yields parallel edges and loops."""
    from .embed import add_edge

    rng = random.Random(seed ^ 0x5EED)
    G = random_planar(n, seed, edges)
    if extra is None:
        extra = rng.randint(1, max(1, n // 2))
    for _ in range(extra):
        f = rng.randrange(len(G.faces))
        m = len(G.faces[f])
        G, _ = add_edge(G, f, rng.randrange(m), rng.randrange(m))
    return G

# -- dispatcher ---------------------------------------------------------------------

_DEFAULTS = {"cycle": 5, "wheel": 5, "prism": 5, "random_planar": 10, "random_multigraph": 8}


def generate(spec: GeneratorSpec) -> PlaneGraph:
    fam, p = spec.family, dict(spec.params)
    n = p.get("n", _DEFAULTS.get(fam))
    ell = p.get("l", 2)
    if fam == "cycle":
        return cycle(n)
    if fam == "wheel":
        return wheel(n)
    if fam == "prism":
        return prism(n)
    if fam == "cube":
        return cube()
    if fam == "dodecahedron":
        return dodecahedron()
    if fam == "octahedron":
        return octahedron()
    if fam == "tight_family":
        return tight_family(ell)
    if fam == "subdivided_k4":
        return subdivided_k4(ell)
    if fam == "random_planar":
        return random_planar(n, p.get("seed", 0), p.get("edges"))
    if fam == "random_multigraph":
        return random_multigraph(n, p.get("seed", 0), p.get("edges"), p.get("extra"))
    raise ValueError(f"unknown family {fam!r}; choose from {', '.join(FAMILIES)}")


# -- .pg format -----------------------------------------------------------------------


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = []
        col = 0
        for tok in body.split():
            col = body.index(tok, col)
            toks.append((tok, col + 1))
            col += len(tok)
        if toks:
            yield lineno, toks


def _int(tok: str, lineno: int, col: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {tok!r}", lineno, col) from None


def parse(text: str) -> PlaneGraph:
    """Read the ``.pg`` text format."""
    header = None
    edges: dict[int, tuple[int, int]] = {}
    rot: dict[int, list[int]] = {}
    dart_line: dict[int, tuple[int, int]] = {}
    rot_line: dict[int, tuple[int, int]] = {}
    for lineno, toks in _tokens(text):
        tag, tcol = toks[0]
        if header is None:
            if tag != "pg" or len(toks) != 3:
                raise ParseError("first line must be 'pg <nVertices> <nEdges>'", lineno, tcol)
            header = (
                _int(toks[1][0], lineno, toks[1][1], "vertex count"),
                _int(toks[2][0], lineno, toks[2][1], "edge count"),
            )
            continue
        if tag == "e":
            if len(toks) != 4:
                raise ParseError("edge line must be 'e <id> <dartA> <dartB>'", lineno, tcol)
            e, a, b = (_int(t, lineno, c, "id") for t, c in toks[1:])
            if e in edges:
                raise ParseError(f"edge {e} defined twice", lineno, toks[1][1])
            for (t, c), d in zip(toks[2:], (a, b)):
                if d in dart_line:
                    raise ParseError(f"dart {d} referenced twice", lineno, c)
                dart_line[d] = (lineno, c)
            edges[e] = (a, b)
        elif tag == "v":
            if len(toks) not in (2, 3):
                raise ParseError("vertex line must be 'v <id> <dart,dart,...>'", lineno, tcol)
            v = _int(toks[1][0], lineno, toks[1][1], "vertex id")
            if v in rot:
                raise ParseError(f"vertex {v} defined twice", lineno, toks[1][1])
            ds: list[int] = []
            if len(toks) == 3:
                body, c = toks[2]
                for part in body.split(","):
                    d = _int(part, lineno, c, "dart")
                    if d in ds or any(d in r for r in rot.values()):
                        raise ParseError(f"dart {d} referenced twice", lineno, c)
                    ds.append(d)
                    rot_line[d] = (lineno, c)
                    c += len(part) + 1
            rot[v] = ds
        else:
            raise ParseError(f"unknown record {tag!r}", lineno, tcol)
    if header is None:
        raise ParseError("empty input", 1)
    if header != (len(rot), len(edges)):
        raise ParseError(f"header announces {header[0]} vertices / {header[1]} edges, found {len(rot)} / {len(edges)}", 1)
    try:
        return PlaneGraph(rot, edges)
    except EmbeddingError as exc:
        d = getattr(exc, "dart", None)
        line, col = rot_line.get(d) or dart_line.get(d) or (1, 1)
        raise ParseError(str(exc), line, col) from exc


def serialize(G: PlaneGraph) -> str:
    """Canonical ``.pg`` text: edges and vertices sorted by id, each rotation
    starting at its least dart."""
    lines = [f"pg {G.n_vertices} {G.n_edges}"]
    for e in G.edges():
        a, b = G.edge_darts(e)
        lines.append(f"e {e} {a} {b}")
    for v in G.vertices():
        ds = list(G.rotation(v))
        if ds:
            i = ds.index(min(ds))
            ds = ds[i:] + ds[:i]
            lines.append(f"v {v} " + ",".join(map(str, ds)))
        else:
            lines.append(f"v {v}")
    return "\n".join(lines) + "\n"


def read_pg(path) -> PlaneGraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write_pg(G: PlaneGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(G))


# -- .col format ------------------------------------------------------------------------


def parse_coloring(text: str) -> Coloring:
    k = None
    col: dict[int, int] = {}
    for lineno, toks in _tokens(text):
        tag, tcol = toks[0]
        if tag == "k" and len(toks) == 2:
            if k is not None:
                raise ParseError("palette given twice", lineno, tcol)
            k = _int(toks[1][0], lineno, toks[1][1], "palette size")
        elif tag == "c" and len(toks) == 3:
            e = _int(toks[1][0], lineno, toks[1][1], "edge id")
            c = _int(toks[2][0], lineno, toks[2][1], "color")
            if e in col:
                raise ParseError(f"edge {e} colored twice", lineno, toks[1][1])
            col[e] = c
        else:
            raise ParseError("expected 'k <int>' or 'c <edgeId> <color>'", lineno, tcol)
    if k is None:
        k = max(col.values(), default=0)
    try:
        return Coloring(col, k)
    except ValueError as exc:
        raise ParseError(str(exc), 1) from exc


def serialize_coloring(phi: Coloring) -> str:
    lines = [f"k {phi.k}"] + [f"c {e} {c}" for e, c in sorted(phi.items())]
    return "\n".join(lines) + "\n"


def read_col(path) -> Coloring:
    with open(path, encoding="utf-8") as fh:
        return parse_coloring(fh.read())


def write_col(phi: Coloring, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_coloring(phi))
