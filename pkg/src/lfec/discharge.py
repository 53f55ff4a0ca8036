"""Exact audit of the discharging argument behind the 7-color bound.

Vertices start with ``5 d(v) - 14`` and faces with ``2 l(f) - 14``; on a
connected plane graph the total is ``-28``.  Rules R1-R4 move charge
between vertices and faces, all computed from the initial charges.
Incidences count with multiplicity: a vertex meeting a face at two corners
sends twice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .embed import PlaneGraph

RULES = ("R1", "R2", "R3i", "R3ii", "R3iii", "R4")


class Element(NamedTuple):
    kind: str  # "v" or "f"
    id: int

    def __str__(self) -> str:
        return f"{self.kind}{self.id}"


@dataclass
class ChargeMap:
    vertex_charge: dict[int, Fraction] = field(default_factory=dict)
    face_charge: dict[int, Fraction] = field(default_factory=dict)

    def __getitem__(self, x: Element) -> Fraction:
        return (self.vertex_charge if x.kind == "v" else self.face_charge)[x.id]

    def add(self, x: Element, amount: Fraction) -> None:
        table = self.vertex_charge if x.kind == "v" else self.face_charge
        table[x.id] += amount

    def elements(self) -> list[Element]:
        return [Element("v", v) for v in sorted(self.vertex_charge)] + [
            Element("f", f) for f in sorted(self.face_charge)
        ]

    def total(self) -> Fraction:
        return sum(self.vertex_charge.values(), Fraction(0)) + sum(self.face_charge.values(), Fraction(0))

    def copy(self) -> "ChargeMap":
        return ChargeMap(dict(self.vertex_charge), dict(self.face_charge))


class Transfer(NamedTuple):
    source: Element
    target: Element
    rule: str
    amount: Fraction


TransferLog = list[Transfer]


def fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _face_lengths(G: PlaneGraph) -> dict[int, int]:
    lengths = {w.face: len(w) for w in G.faces}
    nxt = len(lengths)
    for v in G.vertices():
        if G.degree(v) == 0:
            lengths[nxt] = 0
            nxt += 1
    return lengths


def initial_charges(G: PlaneGraph) -> ChargeMap:
    return ChargeMap(
        {v: Fraction(5 * G.degree(v) - 14) for v in G.vertices()},
        {f: Fraction(2 * n - 14) for f, n in _face_lengths(G).items()},
    )


def _corners(G: PlaneGraph, v: int) -> list[tuple[int, int, int]]:
    """(face, other face across the first edge, other face across the
    second edge) for every corner at ``v``."""
    out = []
    for y in G.rotation(v):
        s = G.sigma(y)
        out.append((G.face_of(s), G.face_of(y), G.face_of(G.twin(s))))
    return out


def apply_rules(G: PlaneGraph) -> tuple[ChargeMap, TransferLog]:
    """Final charges after R1-R4 and the log of every transfer."""
    init = initial_charges(G)
    length = _face_lengths(G)
    log: TransferLog = []

    def send(src: Element, dst: Element, rule: str, amount: Fraction) -> None:
        if amount:
            log.append(Transfer(src, dst, rule, amount))

    for v in G.vertices():
        d = G.degree(v)
        src = Element("v", v)
        corners = _corners(G, v)
        if d >= 4:
            ch = init.vertex_charge[v]
            for f, a, b in corners:
                if length[f] <= 5:
                    send(src, Element("f", f), "R1", ch / d)
                    for other in (a, b):
                        if length[other] >= 7:
                            send(src, Element("f", f), "R2", ch / (2 * d))
        elif d == 3:
            big = sum(1 for f, _, _ in corners if length[f] >= 7)
            for f, _, _ in corners:
                if big == 2 and length[f] <= 5:
                    send(src, Element("f", f), "R3i", Fraction(1))
                elif big == 1 and length[f] == 5:
                    send(src, Element("f", f), "R3ii", Fraction(1, 2))
            if all(length[f] == 5 for f, _, _ in corners):
                for f, _, _ in corners:
                    send(src, Element("f", f), "R3iii", Fraction(1, 3))
    for w in G.faces:
        if len(w) < 8:
            continue
        twos = [G.vertex_of(dd) for dd in w.darts if G.degree(G.vertex_of(dd)) == 2]
        if not twos:
            continue
        share = init.face_charge[w.face] / len(twos)
        for v in twos:
            send(Element("f", w.face), Element("v", v), "R4", share)
    return replay(init, log), log


def replay(initial: ChargeMap, log: TransferLog) -> ChargeMap:
    out = initial.copy()
    for t in log:
        out.add(t.source, -t.amount)
        out.add(t.target, t.amount)
    return out


@dataclass
class AuditReport:
    initial_total: Fraction
    final_total: Fraction
    final: ChargeMap
    log: TransferLog
    negative: list[tuple[Element, Fraction]]
    detected: object  # reduce.Configuration | None
    n_edges: int
    diagnostics: list[str] = field(default_factory=list)

    @property
    def conserved(self) -> bool:
        return self.initial_total == self.final_total

    def text(self) -> str:
        lines = [
            f"initial_total {fmt(self.initial_total)}",
            f"total {fmt(self.final_total)}",
            f"transfers {len(self.log)}",
        ]
        det = "none" if self.detected is None else self.detected.label
        lines.append(f"detect {det}")
        for x, q in self.negative:
            lines.append(f"negative {x} {fmt(q)} detect={det}")
        lines += [f"note {d}" for d in self.diagnostics]
        return "\n".join(lines) + "\n"


def audit(G: PlaneGraph) -> AuditReport:
    """Final charges with the negative elements, annotated with the
    configuration ``reduce.detect`` finds in ``G``."""
    from .reduce import detect

    init = initial_charges(G)
    final, log = apply_rules(G)
    negative = [(x, final[x]) for x in final.elements() if final[x] < 0]
    det = detect(G)
    diags = []
    for t in log:
        if t.rule == "R4" and t.amount < 2:
            diags.append(f"R4 from {t.source} sends {fmt(t.amount)} < 2")
    if det is None and G.n_edges > 12 and G.is_connected():
        diags.append("no reducible configuration in a graph with more than 12 edges")
    return AuditReport(init.total(), final.total(), final, log, negative, det, G.n_edges, sorted(set(diags)))
