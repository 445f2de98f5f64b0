"""Flow graphs: the labeled digraph of orbit dynamics carried by a revealing pair.

Vertices stand for repelling orbits, attracting orbits, and individual
periodic neutral leaves; edges are source-to-sink flow lines, orbit self-loops,
and neutral orbit steps.  Components split into torsion (all neutral) and
non-torsion ones, each with an exact support: a finite set of maximal cones
plus the orbit limit points.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .revealing import (
    RevealingPair,
    SIDE_DOMAIN,
    SIDE_RANGE,
)
from .words import Point, addr_str, is_strict_prefix

V_REPELLER = "repeller-orbit"
V_ATTRACTOR = "attractor-orbit"
V_NEUTRAL = "periodic-neutral-leaf"

E_LINE = "source-sink-line"
E_LOOP = "periodic-self-loop"
E_STEP = "neutral-step"


@dataclass(frozen=True)
class FlowVertex:
    kind: str
    labels: tuple  # orbit Points for orbit kinds, a single address for leaves
    spine: str = ""

    def label_strs(self) -> list[str]:
        if self.kind == V_NEUTRAL:
            return [addr_str(self.labels[0])]
        return [str(p) for p in self.labels]


@dataclass(frozen=True)
class FlowEdge:
    kind: str
    src: int
    dst: int
    label: tuple[str, ...] = ()


@dataclass(frozen=True)
class Support:
    cones: tuple[str, ...]
    limit_points: tuple[Point, ...]

    def covers_point(self, p: Point) -> bool:
        return p in self.limit_points or any(p.starts_with(c) for c in self.cones)


@dataclass
class FlowComponent:
    vertices: tuple[int, ...]
    torsion: bool
    support: Support
    edges: tuple[int, ...] = field(default=())


class FlowGraph:
    def __init__(self, vertices, edges, components, rp: RevealingPair):
        self.vertices: tuple[FlowVertex, ...] = tuple(vertices)
        self.edges: tuple[FlowEdge, ...] = tuple(edges)
        self.components: tuple[FlowComponent, ...] = tuple(components)
        self.pair = rp

    @property
    def n(self) -> int:
        return self.pair.n

    def torsion_components(self) -> list[FlowComponent]:
        return [c for c in self.components if c.torsion]

    def nontorsion_components(self) -> list[FlowComponent]:
        return [c for c in self.components if not c.torsion]

    def to_json_dict(self) -> dict:
        return {
            "vertices": [
                {"kind": v.kind, "labels": v.label_strs(), "spine": v.spine}
                for v in self.vertices
            ],
            "edges": [
                {
                    "kind": e.kind,
                    "src": e.src,
                    "dst": e.dst,
                    "label": [addr_str(a) for a in e.label],
                }
                for e in self.edges
            ],
            "components": [
                {
                    "torsion": c.torsion,
                    "vertices": list(c.vertices),
                    "support_cones": [addr_str(a) for a in c.support.cones],
                    "limit_points": [str(p) for p in c.support.limit_points],
                }
                for c in self.components
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"


def build_flow_graph(rp: RevealingPair) -> FlowGraph:
    vertices: list[FlowVertex] = []
    comp_vertex: dict[tuple[str, str], int] = {}
    leaf_vertex: dict[str, int] = {}

    for c in sorted(rp.components, key=lambda c: (c.side, c.root)):
        pts = rp.orbit_points[c.key()]
        kind = V_REPELLER if c.side == SIDE_DOMAIN else V_ATTRACTOR
        comp_vertex[c.key()] = len(vertices)
        vertices.append(FlowVertex(kind, pts, rp.spines[c.key()]))
    for orbit in rp.neutral_orbits:
        for leaf in orbit:
            leaf_vertex[leaf] = len(vertices)
            vertices.append(FlowVertex(V_NEUTRAL, (leaf,)))

    edges: list[FlowEdge] = []
    for chain in rp.source_sink_chains():
        src_comp = _owning_component(rp, chain.entries[0], SIDE_DOMAIN)
        dst_comp = _owning_component(rp, chain.entries[-1], SIDE_RANGE)
        edges.append(
            FlowEdge(E_LINE, comp_vertex[src_comp.key()], comp_vertex[dst_comp.key()], chain.entries)
        )
    for c in rp.components:
        if len(rp.orbit_points[c.key()]) > 1:
            i = comp_vertex[c.key()]
            edges.append(FlowEdge(E_LOOP, i, i))
    for orbit in rp.neutral_orbits:
        if len(orbit) > 1:
            for i, leaf in enumerate(orbit):
                nxt = orbit[(i + 1) % len(orbit)]
                edges.append(FlowEdge(E_STEP, leaf_vertex[leaf], leaf_vertex[nxt]))
    edges.sort(key=lambda e: (e.kind, e.src, e.dst, e.label))

    # connected components of the undirected graph
    parent = list(range(len(vertices)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for e in edges:
        a, b = find(e.src), find(e.dst)
        if a != b:
            parent[a] = b

    groups: dict[int, list[int]] = {}
    for i in range(len(vertices)):
        groups.setdefault(find(i), []).append(i)

    components: list[FlowComponent] = []
    for verts in sorted(groups.values()):
        torsion = all(vertices[i].kind == V_NEUTRAL for i in verts)
        comp_edges = tuple(
            j for j, e in enumerate(edges) if find(e.src) == find(verts[0])
        )
        addresses: set[str] = set()
        limits: list[Point] = []
        for i in verts:
            v = vertices[i]
            if v.kind == V_NEUTRAL:
                addresses.add(v.labels[0])
            else:
                limits.extend(v.labels)
        for j in comp_edges:
            addresses.update(edges[j].label)
        for c in rp.components:
            if comp_vertex.get(c.key()) in verts:
                addresses.update(rp.data.chain_of[c.root].entries)
        cones = _maximal_cones(addresses)
        components.append(
            FlowComponent(
                tuple(verts),
                torsion,
                Support(cones, tuple(sorted(limits, key=Point.sort_key))),
                comp_edges,
            )
        )
    return FlowGraph(vertices, edges, components, rp)


def _owning_component(rp: RevealingPair, leaf: str, side: str):
    for c in rp.components:
        if c.side == side and is_strict_prefix(c.root, leaf):
            return c
    raise AssertionError(f"no {side}-side component above {addr_str(leaf)}")


def _maximal_cones(addresses: set[str]) -> tuple[str, ...]:
    out = []
    for a in sorted(addresses):
        if not any(is_strict_prefix(b, a) for b in addresses if b != a):
            out.append(a)
    return tuple(out)


def component_support(fg: FlowGraph, comp: FlowComponent) -> Support:
    if comp not in fg.components:
        raise ValueError("component does not belong to this flow graph")
    return comp.support


# -- canonical signatures ----------------------------------------------------


def _min_rotation(word: str) -> str:
    return min(word[i:] + word[:i] for i in range(len(word))) if word else word


def component_signature(fg: FlowGraph, comp: FlowComponent):
    """Isomorphism-class code of a non-torsion component.

    Built from orbit lengths, spines up to cyclic rotation, flow-line
    multiplicities between canonical vertex indices, and a canonical form of
    the labeled digraph.  Invariant under type II rollings and conjugation.
    """
    if comp.torsion:
        raise ValueError("signature is defined for non-torsion components only")
    verts = list(comp.vertices)
    colors = {
        i: (fg.vertices[i].kind, len(fg.vertices[i].labels), _min_rotation(fg.vertices[i].spine))
        for i in verts
    }
    mult: dict[tuple[int, int], int] = {}
    for e in fg.edges:
        if e.kind == E_LINE and e.src in colors:
            mult[(e.src, e.dst)] = mult.get((e.src, e.dst), 0) + 1

    canon = _canonical_digraph(verts, colors, mult)
    repellers = sorted(c for c in colors.values() if c[0] == V_REPELLER)
    attractors = sorted(c for c in colors.values() if c[0] == V_ATTRACTOR)
    return (tuple(repellers), tuple(attractors), canon)


def _canonical_digraph(verts, colors, mult):
    """Canonical encoding via color refinement with exhaustive tie-breaking."""
    col = {i: colors[i] for i in verts}
    while True:
        nxt = {}
        for i in verts:
            outs = sorted((col[j], m) for (a, j), m in mult.items() if a == i)
            ins = sorted((col[j], m) for (j, b), m in mult.items() if b == i)
            nxt[i] = (col[i], tuple(outs), tuple(ins))
        ranks = {c: r for r, c in enumerate(sorted(set(nxt.values())))}
        new = {i: (colors[i], ranks[nxt[i]]) for i in verts}
        if len(set(new.values())) == len(set(col.values())):
            col = new
            break
        col = new

    classes: dict = {}
    for i in verts:
        classes.setdefault(col[i], []).append(i)
    ordered_classes = [classes[c] for c in sorted(classes)]
    if _orderings_count(ordered_classes) > 40320 * 24:
        raise RuntimeError("component too symmetric for exhaustive canonicalization")

    best = None
    for perm in _class_orderings(ordered_classes):
        index = {v: i for i, v in enumerate(perm)}
        enc = (
            tuple(colors[v] for v in perm),
            tuple(sorted((index[a], index[b], m) for (a, b), m in mult.items())),
        )
        if best is None or enc < best:
            best = enc
    return best


def _orderings_count(classes) -> int:
    total = 1
    for cls in classes:
        for k in range(2, len(cls) + 1):
            total *= k
    return total


def _class_orderings(classes):
    pools = [itertools.permutations(cls) for cls in classes]
    for combo in itertools.product(*pools):
        yield [v for group in combo for v in group]


def signature_multiset(fg: FlowGraph):
    return sorted(
        component_signature(fg, c) for c in fg.nontorsion_components()
    )


# -- DOT export ---------------------------------------------------------------


def export_dot(fg: FlowGraph) -> str:
    lines = ["digraph flow {"]
    for i, v in enumerate(fg.vertices):
        label = ";".join(v.label_strs())
        lines.append(f'  n{i} [kind="{v.kind}" label="{label}"];')
    for e in fg.edges:
        attrs = f'kind="{e.kind}"'
        if e.label:
            attrs += ' label="' + ",".join(addr_str(a) for a in e.label) + '"'
        lines.append(f"  n{e.src} -> n{e.dst} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
