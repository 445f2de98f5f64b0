"""Combinatorial discrete train tracks: the circle-and-tree drawing data.

Every chain of a revealing pair contributes a drawn object: periodic orbits
become clockwise circles, repelling and attracting orbits counter-clockwise
circles with the complementary tree glued along a spine arc (attractor trees
reflected), and source-to-sink chains become demarcated lines.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .revealing import RevealingPair, SIDE_DOMAIN
from .words import addr_str


@dataclass(frozen=True)
class Arc:
    label: str = ""
    top: str = ""      # spine arcs carry two demarcation labels instead of one
    bottom: str = ""

    def to_json_dict(self):
        if self.top or self.bottom:
            return {"top": addr_str(self.top), "bottom": addr_str(self.bottom)}
        return {"label": addr_str(self.label)}


@dataclass(frozen=True)
class Circle:
    kind: str  # "periodic" | "repeller" | "attractor"
    orientation: str  # "cw" | "ccw"
    arcs: tuple[Arc, ...]
    reflected: bool = False

    def to_json_dict(self):
        return {
            "kind": self.kind,
            "orientation": self.orientation,
            "reflected": self.reflected,
            "arcs": [a.to_json_dict() for a in self.arcs],
        }


@dataclass(frozen=True)
class AttachedTree:
    circle_index: int
    root: str
    rel_leaves: tuple[str, ...]
    spine: str
    reflected: bool

    def to_json_dict(self):
        return {
            "circle": self.circle_index,
            "root": addr_str(self.root),
            "leaves": list(self.rel_leaves),
            "spine": self.spine,
            "reflected": self.reflected,
        }


@dataclass(frozen=True)
class Line:
    labels: tuple[str, ...]  # demarcation labels along the source-sink chain

    def to_json_dict(self):
        return {"labels": [addr_str(a) for a in self.labels]}


class TrainTrack:
    def __init__(self, circles, trees, lines):
        self.circles: tuple[Circle, ...] = tuple(circles)
        self.attached_trees: tuple[AttachedTree, ...] = tuple(trees)
        self.lines: tuple[Line, ...] = tuple(lines)

    def to_json_dict(self) -> dict:
        return {
            "circles": [c.to_json_dict() for c in self.circles],
            "attached_trees": [t.to_json_dict() for t in self.attached_trees],
            "lines": [ln.to_json_dict() for ln in self.lines],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"


def build_train_track(rp: RevealingPair) -> TrainTrack:
    circles: list[Circle] = []
    trees: list[AttachedTree] = []

    for orbit in rp.neutral_orbits:
        arcs = tuple(Arc(label=a) for a in orbit)
        circles.append(Circle("periodic", "cw", arcs))

    for comp in sorted(rp.components, key=lambda c: (c.side, c.root)):
        chain = rp.data.chain_of[comp.root]
        spine = rp.spines[comp.key()]
        if comp.side == SIDE_DOMAIN:
            # chain runs repeller, neutrals..., root; the spine arc joins the
            # root (top) to the repeller (bottom), then the orbit leaves follow
            # counter-clockwise
            spine_arc = Arc(top=chain.entries[-1], bottom=chain.entries[0])
            rest = chain.entries[1:-1]
            kind, reflected = "repeller", False
        else:
            # chain runs root, neutrals..., attractor; bottom (attractor leaf)
            # comes before top (root) in counter-clockwise order
            spine_arc = Arc(top=chain.entries[0], bottom=chain.entries[-1])
            rest = chain.entries[1:-1]
            kind, reflected = "attractor", True
        arcs = (spine_arc,) + tuple(Arc(label=a) for a in rest)
        circles.append(Circle(kind, "ccw", arcs, reflected))
        trees.append(
            AttachedTree(len(circles) - 1, comp.root, comp.rel_leaves(), spine, reflected)
        )

    lines = [Line(ch.entries) for ch in rp.source_sink_chains()]
    return TrainTrack(circles, trees, lines)


def export_dot(tt: TrainTrack) -> str:
    """Deterministic DOT rendering: circles as node cycles, lines as paths."""
    lines = ["digraph traintrack {"]
    node = 0
    for ci, circle in enumerate(tt.circles):
        ids = []
        for arc in circle.arcs:
            if arc.top or arc.bottom:
                label = f"{addr_str(arc.top)}|{addr_str(arc.bottom)}"
            else:
                label = addr_str(arc.label)
            lines.append(f'  n{node} [circle={ci} kind="{circle.kind}" label="{label}"];')
            ids.append(node)
            node += 1
        for i, a in enumerate(ids):
            b = ids[(i + 1) % len(ids)]
            if len(ids) > 1 or circle.kind != "periodic":
                lines.append(f"  n{a} -> n{b} [circle={ci}];")
    for li, line in enumerate(tt.lines):
        ids = []
        for a in line.labels:
            lines.append(f'  n{node} [line={li} label="{addr_str(a)}"];')
            ids.append(node)
            node += 1
        for a, b in zip(ids, ids[1:]):
            lines.append(f"  n{a} -> n{b} [line={li}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
