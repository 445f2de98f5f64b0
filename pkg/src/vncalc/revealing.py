"""Revealing tree pairs: difference components, leaf chains, and rollings.

Viewing an element's rule table as a pair of finite trees (domain tree A,
range tree B), the carets of A not in B fall into components, each the full
A-subtree under some leaf of B, and symmetrically for B-A.  Tracing the orbit
of a non-neutral leaf through the neutral leaves yields its chain; a pair is
revealing when every A-B component owns a repeller (a leaf whose chain ends at
its own component root) and every B-A component owns an attractor.  Revealing
pairs expose the full orbit dynamics: repelling/attracting periodic points
with their spines, source-to-sink flow, and the periodic region.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .elements import Element, expand_by_shape, serialize_element
from .words import Point, addr_str, is_strict_prefix

KIND_PERIODIC = "periodic-neutral"
KIND_REPELLER = "repeller"
KIND_ATTRACTOR = "attractor"
KIND_SOURCE_SINK = "source-sink"

SIDE_DOMAIN = "domain"  # carets of the domain tree missing from the range tree
SIDE_RANGE = "range"


@dataclass(frozen=True)
class DiffComponent:
    side: str
    root: str
    leaves: tuple[str, ...]

    def rel_leaves(self) -> tuple[str, ...]:
        return tuple(u[len(self.root):] for u in self.leaves)

    def key(self):
        return (self.side, self.root)


@dataclass(frozen=True)
class Chain:
    """A leaf orbit segment (iterated augmentation chain)."""

    kind: str
    entries: tuple[str, ...]


class PairData:
    """Full leaf classification of one tree pair (one rule table)."""

    def __init__(self, e: Element):
        self.element = e
        dom = set(e.domain)
        ran = set(u for u in e.range)
        self.neutral = dom & ran
        self.domain_only = dom - ran
        self.range_only = ran - dom

        self.components: list[DiffComponent] = []
        for rho in sorted(self.range_only):
            below = tuple(sorted(u for u in dom if is_strict_prefix(rho, u)))
            if below:
                self.components.append(DiffComponent(SIDE_DOMAIN, rho, below))
        for delta in sorted(self.domain_only):
            below = tuple(sorted(v for v in ran if is_strict_prefix(delta, v)))
            if below:
                self.components.append(DiffComponent(SIDE_RANGE, delta, below))
        self.by_key = {c.key(): c for c in self.components}

        # Forward chains from every non-neutral domain leaf; they end at the
        # first non-neutral range leaf hit.
        self.chains: list[Chain] = []
        self.chain_of: dict[str, Chain] = {}
        for lam in sorted(self.domain_only):
            entries = [lam]
            cur = lam
            guard = len(e.rules) + 2
            while True:
                cur = e._map[cur]
                entries.append(cur)
                if cur in self.range_only:
                    break
                guard -= 1
                if guard < 0:
                    raise AssertionError("chain failed to terminate")
            first, last = entries[0], entries[-1]
            if is_strict_prefix(last, first):
                kind = KIND_REPELLER
            elif is_strict_prefix(first, last):
                kind = KIND_ATTRACTOR
            else:
                kind = KIND_SOURCE_SINK
            chain = Chain(kind, tuple(entries))
            self.chains.append(chain)
            for a in entries:
                self.chain_of[a] = chain

        # Remaining neutral leaves sit on purely neutral (periodic) orbits.
        self.neutral_orbits: list[tuple[str, ...]] = []
        self.orbit_of: dict[str, tuple[str, ...]] = {}
        seen: set[str] = set()
        for lam in sorted(self.neutral):
            if lam in seen or lam in self.chain_of:
                continue
            orbit = [lam]
            cur = e._map[lam]
            while cur != lam:
                orbit.append(cur)
                cur = e._map[cur]
            cycle = tuple(orbit)
            self.neutral_orbits.append(cycle)
            for a in cycle:
                seen.add(a)
                self.orbit_of[a] = cycle

    # A-B components are rooted at range leaves, so the repeller chain ends at
    # the root; B-A components are rooted at domain leaves, so the attractor
    # chain starts there.
    def chain_ending_at(self, rho: str) -> Chain:
        return self.chain_of[rho]

    def repeller_of(self, comp: DiffComponent) -> Optional[str]:
        chain = self.chain_of.get(comp.root)
        if chain is not None and chain.kind == KIND_REPELLER and chain.entries[-1] == comp.root:
            return chain.entries[0]
        return None

    def attractor_of(self, comp: DiffComponent) -> Optional[str]:
        chain = self.chain_of.get(comp.root)
        if chain is not None and chain.kind == KIND_ATTRACTOR and chain.entries[0] == comp.root:
            return chain.entries[-1]
        return None

    def is_revealing(self) -> bool:
        for c in self.components:
            if c.side == SIDE_DOMAIN and self.repeller_of(c) is None:
                return False
            if c.side == SIDE_RANGE and self.attractor_of(c) is None:
                return False
        return True


def difference_components(e: Element) -> list[DiffComponent]:
    return PairData(e).components


def trace_iac(e: Element, leaf: str) -> Chain:
    """The chain through a leaf of the domain or range code.

    Periodic neutral leaves get their full cycle (no repeated endpoint);
    neutral travellers get the chain of their generating non-neutral leaf.
    """
    data = PairData(e)
    if leaf in data.chain_of:
        return data.chain_of[leaf]
    if leaf in data.orbit_of:
        cycle = data.orbit_of[leaf]
        i = cycle.index(leaf)
        return Chain(KIND_PERIODIC, cycle[i:] + cycle[:i])
    raise ValueError(f"{addr_str(leaf)} is not a leaf of the domain or range code")


def is_revealing(e: Element) -> bool:
    return PairData(e).is_revealing()


class RevealingPair:
    """An element together with the classification of one revealing table."""

    def __init__(self, data: PairData):
        if not data.is_revealing():
            raise ValueError("tree pair is not revealing")
        self.element = data.element
        self.data = data
        self.components = tuple(data.components)
        self.iacs = tuple(data.chains) + tuple(
            Chain(KIND_PERIODIC, orbit) for orbit in data.neutral_orbits
        )
        self.neutral_orbits = tuple(data.neutral_orbits)

        self.spines: dict[tuple[str, str], str] = {}
        self.orbit_points: dict[tuple[str, str], tuple[Point, ...]] = {}
        for c in self.components:
            chain = data.chain_of[c.root]
            if c.side == SIDE_DOMAIN:
                spine = chain.entries[0][len(chain.entries[-1]):]
            else:
                spine = chain.entries[-1][len(chain.entries[0]):]
            self.spines[c.key()] = spine
            pts = tuple(Point(a, spine) for a in chain.entries[:-1])
            self.orbit_points[c.key()] = pts

    @property
    def n(self) -> int:
        return self.element.n

    def component(self, side: str, root: str) -> DiffComponent:
        return self.data.by_key[(side, root)]

    def repelling_points(self) -> list[Point]:
        out = []
        for c in self.components:
            if c.side == SIDE_DOMAIN:
                out.extend(self.orbit_points[c.key()])
        return sorted(out, key=Point.sort_key)

    def attracting_points(self) -> list[Point]:
        out = []
        for c in self.components:
            if c.side == SIDE_RANGE:
                out.extend(self.orbit_points[c.key()])
        return sorted(out, key=Point.sort_key)

    def source_sink_chains(self) -> list[Chain]:
        return [ch for ch in self.data.chains if ch.kind == KIND_SOURCE_SINK]

    def to_json_dict(self) -> dict:
        return {
            "element": serialize_element(self.element),
            "components": [
                {
                    "side": c.side,
                    "root": addr_str(c.root),
                    "leaves": [addr_str(u) for u in c.leaves],
                }
                for c in self.components
            ],
            "iacs": [
                {"kind": ch.kind, "chain": [addr_str(a) for a in ch.entries]}
                for ch in self.iacs
            ],
            "spines": {
                addr_str(root): spine for (side, root), spine in sorted(self.spines.items())
            },
            "orbits": [
                [{"preperiod": addr_str(p.pre), "period": p.per} for p in self.orbit_points[c.key()]]
                for c in self.components
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"


def build_pair(e: Element) -> RevealingPair:
    """Classify the element's current table, which must already be revealing."""
    return RevealingPair(PairData(e))


def make_revealing(e: Element, max_iterations: Optional[int] = None) -> RevealingPair:
    """A revealing pair for (an expansion of) the reduced form of e.

    A component whose defining chain escapes elsewhere is migrated one orbit
    step (backwards for domain-side components, forwards for range-side ones)
    by a simple augmentation with the component's own shape; this repeats until
    every component owns its repeller or attractor.  The iteration cap only
    guards against bugs; termination is expected.
    """
    cur = e.reduce()
    carets = (len(cur.rules) - 1) // (cur.n - 1) + 1
    limit = max_iterations if max_iterations is not None else max(64, 10 * carets * carets)
    for _ in range(limit):
        data = PairData(cur)
        bad = None
        for c in data.components:
            if c.side == SIDE_DOMAIN and data.repeller_of(c) is None:
                bad = c
                break
        if bad is None:
            for c in data.components:
                if c.side == SIDE_RANGE and data.attractor_of(c) is None:
                    bad = c
                    break
        if bad is None:
            rp = RevealingPair(data)
            assert rp.element == e, "revealing construction changed the element"
            return rp
        if bad.side == SIDE_DOMAIN:
            # the root is a range leaf; attach the component's shape at its
            # preimage leaf, cancelling the component and re-rooting it there
            target = cur.preimage_of_cone(bad.root)
        else:
            # the root is a domain leaf; push the component forward onto its image
            target = bad.root
        cur = expand_by_shape(cur, target, bad.rel_leaves())
    raise RuntimeError(
        f"revealing construction did not stabilize within {limit} iterations; "
        "this signals a bug in the migration strategy"
    )


# -- rollings ---------------------------------------------------------------


@dataclass(frozen=True)
class RollingMove:
    """A rolling instruction.

    kind 'II': target a component (side, root).
    kind 'E': target a periodic orbit (any leaf of it) or a source-sink chain
              (its source leaf), passed in `leaf`.
    kind 'I': target a component plus a proper nonempty prefix `delta` of its
              spine.
    """

    kind: str
    side: str = ""
    root: str = ""
    leaf: str = ""
    delta: str = ""


def rolling(rp: RevealingPair, move: RollingMove) -> RevealingPair:
    if move.kind == "II":
        return _rolling_two(rp, move.side, move.root)
    if move.kind == "E":
        return _rolling_e(rp, move.leaf)
    if move.kind == "I":
        return _rolling_one(rp, move.side, move.root, move.delta)
    raise ValueError(f"unknown rolling kind {move.kind!r}")


def _component_or_raise(rp: RevealingPair, side: str, root: str) -> DiffComponent:
    comp = rp.data.by_key.get((side, root))
    if comp is None:
        raise ValueError(f"no {side}-side component rooted at {addr_str(root)}")
    return comp


def _rolling_two(rp: RevealingPair, side: str, root: str) -> RevealingPair:
    comp = _component_or_raise(rp, side, root)
    e = rp.element
    chain = rp.data.chain_of[comp.root]
    if side == SIDE_DOMAIN:
        # copy of the component at the last orbit leaf of the repeller, and at
        # its image (the component root) on the range side
        target = chain.entries[-2]
    else:
        # copy at the first orbit leaf of the attractor, which is the root
        target = chain.entries[0]
    return build_pair(expand_by_shape(e, target, comp.rel_leaves()))


def _rolling_e(rp: RevealingPair, leaf: str) -> RevealingPair:
    e = rp.element
    if leaf in rp.data.orbit_of:
        targets = rp.data.orbit_of[leaf]
    elif leaf in rp.data.chain_of:
        chain = rp.data.chain_of[leaf]
        if chain.kind != KIND_SOURCE_SINK or chain.entries[0] != leaf:
            raise ValueError(
                f"{addr_str(leaf)} is not a periodic orbit leaf or a source leaf"
            )
        targets = chain.entries[:-1]
    else:
        raise ValueError(f"{addr_str(leaf)} is not a leaf of the pair")
    from .elements import expand_at

    cur = e
    for t in targets:
        cur = expand_at(cur, t)
    return build_pair(cur)


def _rolling_one(rp: RevealingPair, side: str, root: str, delta: str) -> RevealingPair:
    comp = _component_or_raise(rp, side, root)
    spine = rp.spines[comp.key()]
    if not delta or len(delta) >= len(spine) or not spine.startswith(delta):
        raise ValueError(
            f"delta {delta!r} must be a proper nonempty prefix of the spine {spine!r}"
        )
    # cancelling tree: the component pruned at the node delta below its root
    rel = sorted({u if not u.startswith(delta) else delta for u in comp.rel_leaves()})
    chain = rp.data.chain_of[comp.root]
    targets = chain.entries[:-1] if side == SIDE_DOMAIN else chain.entries[:-1]
    cur = rp.element
    for t in targets:
        cur = expand_by_shape(cur, t, rel)
    return build_pair(cur)


# -- revealed dynamics ------------------------------------------------------


def spine_and_periodic_orbit(rp: RevealingPair, comp: DiffComponent) -> tuple[str, list[Point]]:
    key = comp.key()
    if key not in rp.spines:
        raise ValueError("component does not belong to this revealing pair")
    chain = rp.data.chain_of[comp.root]
    if comp.side == SIDE_DOMAIN and chain.kind != KIND_REPELLER:
        raise ValueError("component has no repeller")
    if comp.side == SIDE_RANGE and chain.kind != KIND_ATTRACTOR:
        raise ValueError("component has no attractor")
    return rp.spines[key], list(rp.orbit_points[key])


def partition_periodic_moving(rp: RevealingPair) -> tuple[set[str], set[str]]:
    """Split the boundary into the periodic region and the moving region.

    Returns cone sets (T, Z): T holds the cones of periodic neutral leaves, Z
    the component root cones together with all chain-interior neutral leaves.
    Jointly they form a complete prefix code.
    """
    t_cones = {a for orbit in rp.neutral_orbits for a in orbit}
    z_cones = {c.root for c in rp.components}
    for chain in rp.data.chains:
        for a in chain.entries:
            if a in rp.data.neutral:
                z_cones.add(a)
    return t_cones, z_cones


partition_TZ = partition_periodic_moving


def slope_exponent_at(e: Element, p: Point) -> int:
    """Exponent s with local slope (2n-1)^s of e at p."""
    u = e.leaf_for_point(p)
    return len(u) - len(e.image_of_cone(u))
