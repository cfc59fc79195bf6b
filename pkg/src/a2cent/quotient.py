"""BFS construction of the quotient graph of groups.

Vertices are orbits of axial walls (keyed by their necklace) and of median
lines of flip-symmetric strips (keyed by the strip's canonical edge key);
edges are orbits of strips.  At a wall vertex, strips are identified under
the wall stabilizer (shifts by multiples of the wall period); across the
graph, edges are deduplicated by the canonical edge key, so back-edges,
loops and parallel edges are all handled uniformly.

All witness words are relative to the base vertex of the canonical rotation
of the input element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import InvariantError
from .presentation import TrianglePresentation
from .strips import (Strip, canonical_edge_key, enumerate_periodic_strips,
                     flip_shifts, group_by_wall_shifts, median_order, shift)
from .walls import (Necklace, canonical_rotation, minimal_period,
                    stabilizer_generator_word, stabilizer_order, wall_word)
from .words import FormalWord

VERTEX_CAP = 10_000  # safety net; the fixtures stay well under 100


@dataclass
class QuotientVertex:
    index: int
    kind: str  # "wall" | "median"
    key: tuple
    group_order: int
    generator_witness: FormalWord
    display_label: str
    # wall vertices only
    sequence: tuple[int, ...] = ()
    period: int = 0
    base_witness: FormalWord = field(default_factory=FormalWord)

    def to_json(self):
        return {
            "label": self.display_label,
            "kind": self.kind,
            "group_order": self.group_order,
            "generator_witness": self.generator_witness.to_json(),
            "generator_witness_str": str(self.generator_witness) if self.generator_witness else None,
        }


@dataclass
class QuotientEdge:
    index: int
    endpoints: tuple[int, int]
    key: tuple
    group_order: int
    multipliers: tuple[int, int]
    conjugator_witness: FormalWord
    in_spanning_tree: bool
    strip: Strip

    def to_json(self, graph):
        return {
            "endpoints": [graph.vertices[self.endpoints[0]].display_label,
                          graph.vertices[self.endpoints[1]].display_label],
            "group_order": self.group_order,
            "multipliers": list(self.multipliers),
            "in_spanning_tree": self.in_spanning_tree,
            "conjugator_witness": self.conjugator_witness.to_json(),
            "strip": self.strip.to_json(),
        }


@dataclass
class QuotientGraphOfGroups:
    presentation: TrianglePresentation
    element: tuple[int, ...]
    n: int
    classification: str  # "single_axis" | "graph_of_groups"
    vertices: list[QuotientVertex]
    edges: list[QuotientEdge]
    base_vertex: int = 0

    @property
    def betti_number(self) -> int:
        return len(self.edges) - len(self.vertices) + 1

    def wall_vertices(self):
        return [v for v in self.vertices if v.kind == "wall"]

    def median_vertices(self):
        return [v for v in self.vertices if v.kind == "median"]

    def to_json(self):
        return {
            "element": list(self.element),
            "n": self.n,
            "classification": self.classification,
            "base_vertex": self.vertices[self.base_vertex].display_label,
            "betti_number": self.betti_number,
            "vertices": [v.to_json() for v in self.vertices],
            "edges": [e.to_json(self) for e in self.edges],
        }

    def to_dot(self) -> str:
        lines = ["graph quotient {", "  node [shape=ellipse];"]
        for v in self.vertices:
            ann = f"\\nZ/{v.group_order}Z" if v.group_order > 1 else ""
            shape = "  shape=box" if v.kind == "median" else ""
            lines.append(
                f'  v{v.index} [label="{v.display_label}{ann}"{"," + shape if shape else ""}];')
        for e in self.edges:
            i, j = e.endpoints
            attrs = []
            if e.group_order > 1:
                attrs.append(f'label="Z/{e.group_order}Z"')
            if not e.in_spanning_tree:
                attrs.append("style=dashed")
            suffix = f' [{", ".join(attrs)}]' if attrs else ""
            lines.append(f"  v{i} -- v{j}{suffix};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _median_display_label(strip: Strip) -> str:
    """Bracketed positive word conjugate to the glide, e.g. "[0]" or "[2,3,5]".

    For glide step d the core word is a_0..a_{d-1} x_{t_d}^-1; with d = 0
    the positive representative is the single letter t_0 (the inverse glide),
    otherwise x_{t_d}^-1 expands through the lower triangle to x_{a_d} x_{s_d}.
    The label is minimized over anchor phases and rotations.
    """
    d = flip_shifts(strip)[0]
    n = strip.length
    candidates = []
    for k0 in range(n):
        sp = shift(strip, k0)
        if d == 0:
            word = (sp.t[0],)
        else:
            word = tuple(sp.a[:d]) + (sp.a[d], sp.s[d])
        candidates.append(canonical_rotation(word))
    best = min(candidates)
    return "[" + ",".join(str(x) for x in best) + "]"


def _anchor_shift(sequence, canon) -> int:
    """Minimal dd with sequence rotated by dd equal to the canonical rotation."""
    n = len(sequence)
    for dd in range(n):
        if sequence[dd:] + sequence[:dd] == canon:
            return dd
    raise AssertionError("canonical rotation is always reachable")


def build_quotient(presentation: TrianglePresentation, element) -> QuotientGraphOfGroups:
    """Quotient graph of groups of the axial-wall tree for a wall word."""
    neck = wall_word(presentation, element)
    n = neck.length

    vertices: list[QuotientVertex] = []
    edges: list[QuotientEdge] = []
    wall_ids: dict[tuple, int] = {}
    median_ids: dict[tuple, int] = {}
    edge_keys: set = set()

    def new_wall_vertex(sequence, witness) -> int:
        p = minimal_period(sequence)
        order = stabilizer_order(n, p)
        gen = (stabilizer_generator_word(witness, sequence, p)
               if order > 1 else FormalWord())
        v = QuotientVertex(
            index=len(vertices), kind="wall", key=sequence,
            group_order=order, generator_witness=gen,
            display_label=Necklace(sequence, p).display_label,
            sequence=sequence, period=p, base_witness=witness)
        vertices.append(v)
        wall_ids[sequence] = v.index
        if len(vertices) > VERTEX_CAP:
            raise InvariantError("vertex cap exceeded; BFS failed to terminate")
        return v.index

    base = new_wall_vertex(neck.labels, FormalWord())
    queue = [base]
    seen_any_strip = False

    while queue:
        vid = queue.pop(0)
        v = vertices[vid]
        strips = enumerate_periodic_strips(presentation, v.sequence)
        if len(strips) > presentation.thickness_q + 1:
            raise InvariantError("more strips than the valency bound q+1")
        if vid == base and strips:
            seen_any_strip = True
        for cls in group_by_wall_shifts(strips, v.period):
            rep = cls[0]
            key = canonical_edge_key(rep)
            if key in edge_keys:
                continue  # back-edge or the second end of a loop
            edge_keys.add(key)
            pe = rep.period
            edge_order = n // pe
            ds = flip_shifts(rep)
            if ds:
                d = ds[0]
                m_order = median_order(rep)
                mu_wall = pe // v.period
                mu_med = 2 * pe // (2 * d + 1)
                if 2 * pe % (2 * d + 1) != 0:
                    raise InvariantError("median inclusion multiplier is not integral")
                glide_core = FormalWord.from_indices(rep.a[:d]) * \
                    FormalWord.generator(rep.t[d], -1)
                glide = glide_core.conjugate_by(v.base_witness)
                is_new = key not in median_ids
                if is_new:
                    mv = QuotientVertex(
                        index=len(vertices), kind="median", key=key,
                        group_order=m_order, generator_witness=glide,
                        display_label=_median_display_label(rep))
                    vertices.append(mv)
                    median_ids[key] = mv.index
                mid = median_ids[key]
                edges.append(QuotientEdge(
                    index=len(edges), endpoints=(vid, mid), key=key,
                    group_order=edge_order, multipliers=(mu_wall, mu_med),
                    conjugator_witness=FormalWord(), in_spanning_tree=is_new,
                    strip=rep))
            else:
                canon_b = canonical_rotation(rep.b)
                dd = _anchor_shift(rep.b, canon_b)
                lift_witness = (v.base_witness
                                * FormalWord.generator(rep.t[0], -1)
                                * FormalWord.from_indices(rep.b[:dd]))
                is_new = canon_b not in wall_ids
                if is_new:
                    other = new_wall_vertex(canon_b, lift_witness)
                    queue.append(other)
                    conj = FormalWord()
                else:
                    other = wall_ids[canon_b]
                    conj = lift_witness * vertices[other].base_witness.inverse()
                mu_wall = pe // v.period
                mu_other = pe // vertices[other].period
                edges.append(QuotientEdge(
                    index=len(edges), endpoints=(vid, other), key=key,
                    group_order=edge_order, multipliers=(mu_wall, mu_other),
                    conjugator_witness=conj, in_spanning_tree=is_new,
                    strip=rep))

    classification = "graph_of_groups" if seen_any_strip else "single_axis"
    graph = QuotientGraphOfGroups(
        presentation=presentation, element=neck.labels, n=n,
        classification=classification, vertices=vertices, edges=edges)
    _check_graph(graph)
    return graph


def _check_graph(graph: QuotientGraphOfGroups) -> None:
    n = graph.n
    tree_count = 0
    for v in graph.vertices:
        if v.kind == "wall":
            if n % v.group_order != 0 or v.group_order * v.period != n:
                raise InvariantError(f"wall vertex order {v.group_order} inconsistent with n={n}")
        else:
            if (2 * n) % v.group_order != 0:
                raise InvariantError(f"median vertex order {v.group_order} does not divide 2n")
    for e in graph.edges:
        o1 = graph.vertices[e.endpoints[0]].group_order
        o2 = graph.vertices[e.endpoints[1]].group_order
        if o1 % e.group_order != 0 or o2 % e.group_order != 0:
            raise InvariantError("edge group order does not divide an endpoint order")
        for mu, o in zip(e.multipliers, (o1, o2)):
            if mu < 1:
                raise InvariantError("inclusion multiplier must be positive")
            # injectivity of Z/o_e -> Z/o via gen -> gen^mu
            if e.group_order > 1 and o // gcd(mu, o) != e.group_order:
                raise InvariantError("edge inclusion is not injective")
        if e.in_spanning_tree:
            tree_count += 1
    if tree_count != len(graph.vertices) - 1:
        raise InvariantError("spanning tree does not span the graph")


def vertex_witnesses(graph: QuotientGraphOfGroups) -> dict[str, FormalWord]:
    """Generator witness per nontrivial vertex group, keyed by display label."""
    return {v.display_label: v.generator_witness
            for v in graph.vertices if v.group_order > 1}
