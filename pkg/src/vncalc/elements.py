"""Elements of the Higman-Thompson group V_n as prefix-replacement tables.

An element is a finite bijective table of rules u -> v between two complete
prefix codes over the alphabet 0..n-1.  The rule u -> v carries the cone of u
affinely onto the cone of v by prefix substitution, with slope (2n-1)^(|u|-|v|)
in the interval picture.  A table with no collapsible sibling block is reduced;
each element has a unique reduced table, which is the canonical form used for
equality.
"""

from __future__ import annotations

import random
from functools import cached_property
from typing import Iterable, Optional

from .words import (
    DIGITS,
    Point,
    addr_str,
    check_address,
    check_arity,
    parse_addr,
    validate_prefix_code,
)


class Element:
    """A prefix-replacement bijection of the n-ary Cantor set.

    The rule table is kept exactly as given (sorted by domain address); it is
    not reduced automatically, since expanded tables matter for the revealing
    pair machinery.  Equality and hashing go through the reduced table.
    """

    def __init__(self, n: int, rules: Iterable[tuple[str, str]]):
        self.n = check_arity(n)
        table = sorted((str(u), str(v)) for u, v in rules)
        domain = [u for u, _ in table]
        rng = [v for _, v in table]
        validate_prefix_code(domain, n, "domain code")
        validate_prefix_code(rng, n, "range code")
        self.rules: tuple[tuple[str, str], ...] = tuple(table)
        self._map = dict(self.rules)
        self._inv_map = {v: u for u, v in self.rules}

    # -- basic views -------------------------------------------------------

    @property
    def domain(self) -> tuple[str, ...]:
        return tuple(u for u, _ in self.rules)

    @property
    def range(self) -> tuple[str, ...]:
        return tuple(sorted(v for _, v in self.rules))

    def __repr__(self):
        body = ", ".join(f"{addr_str(u)}->{addr_str(v)}" for u, v in self.rules)
        return f"<V_{self.n} {body}>"

    def max_depth(self) -> int:
        return max(max(len(u), len(v)) for u, v in self.rules)

    # -- cone actions ------------------------------------------------------

    def image_of_cone(self, u: str) -> Optional[str]:
        """Image of cone u when it maps onto a single cone, else None.

        Defined exactly when u lies at or below a domain leaf.
        """
        for k in range(len(u) + 1):
            head = u[:k]
            if head in self._map:
                return self._map[head] + u[k:]
        return None

    def preimage_of_cone(self, v: str) -> Optional[str]:
        for k in range(len(v) + 1):
            head = v[:k]
            if head in self._inv_map:
                return self._inv_map[head] + v[k:]
        return None

    def leaf_for_point(self, p: Point) -> str:
        """The unique domain leaf whose cone contains p."""
        depth = max(len(u) for u, _ in self.rules)
        word = p.head(depth)
        for k in range(len(word) + 1):
            if word[:k] in self._map:
                return word[:k]
        raise AssertionError("complete domain code has no leaf over a point")

    def __call__(self, p: Point) -> Point:
        u = self.leaf_for_point(p)
        return p.replace_prefix(u, self._map[u])

    # -- group structure ----------------------------------------------------

    @cached_property
    def _reduced(self) -> "Element":
        table = dict(self.rules)
        n = self.n
        changed = True
        while changed:
            changed = False
            parents = {}
            for u in table:
                if u:
                    parents.setdefault(u[:-1], []).append(u)
            for q, kids in parents.items():
                if len(kids) != n:
                    continue
                images = [table.get(q + d) for d in DIGITS[:n]]
                if any(w is None or not w for w in images):
                    continue
                stem = images[0][:-1]
                if all(images[i] == stem + DIGITS[i] for i in range(n)):
                    for d in DIGITS[:n]:
                        del table[q + d]
                    table[q] = stem
                    changed = True
                    break
        if len(table) == len(self.rules):
            return self
        return Element(n, table.items())

    def reduce(self) -> "Element":
        return self._reduced

    def is_reduced(self) -> bool:
        return self._reduced is self

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.n == other.n and self._reduced.rules == other._reduced.rules

    def __hash__(self):
        return hash((self.n, self._reduced.rules))

    def __mul__(self, other: "Element") -> "Element":
        return compose(self, other)

    def __invert__(self) -> "Element":
        return invert(self)

    def __pow__(self, k: int) -> "Element":
        if k == 0:
            return identity(self.n)
        if k < 0:
            return invert(self) ** (-k)
        half = self ** (k // 2)
        return half * half * self if k % 2 else half * half

    @property
    def is_identity(self) -> bool:
        return self._reduced.rules == (("", ""),)


def identity(n: int) -> Element:
    return Element(n, [("", "")])


def compose(e1: Element, e2: Element) -> Element:
    """The element acting as e1 followed by e2, reduced."""
    if e1.n != e2.n:
        raise ValueError(f"arity mismatch: {e1.n} vs {e2.n}")
    rules = []
    for u, v in e1.rules:
        w = e2.image_of_cone(v)
        if w is not None:
            rules.append((u, w))
        else:
            for d, img in e2.rules:
                if d.startswith(v) and len(d) > len(v):
                    rules.append((u + d[len(v):], img))
    return Element(e1.n, rules).reduce()


def invert(e: Element) -> Element:
    return Element(e.n, ((v, u) for u, v in e.rules))


def conjugate(a: Element, f: Element) -> Element:
    """a conjugated by f: first undo f, act by a, then apply f."""
    if a.n != f.n:
        raise ValueError(f"arity mismatch: {a.n} vs {f.n}")
    return compose(compose(invert(f), a), f).reduce()


def commutes(a: Element, b: Element) -> bool:
    return compose(a, b) == compose(b, a)


def expand_at(e: Element, leaf: str) -> Element:
    """Replace a domain leaf and its image by their n children; same element."""
    check_address(leaf, e.n)
    if leaf not in e._map:
        raise ValueError(f"{addr_str(leaf)} is not a domain leaf")
    v = e._map[leaf]
    rules = [(u, w) for u, w in e.rules if u != leaf]
    rules.extend((leaf + d, v + d) for d in DIGITS[: e.n])
    return Element(e.n, rules)


def expand_by_shape(e: Element, leaf: str, rel_leaves: Iterable[str]) -> Element:
    """Expand a domain leaf by a whole tree shape given by its relative leaf code.

    Equivalent to a sequence of single-caret expansions; the element is
    unchanged.
    """
    if leaf not in e._map:
        raise ValueError(f"{addr_str(leaf)} is not a domain leaf")
    rel = sorted(rel_leaves)
    validate_prefix_code(rel, e.n, "shape code")
    v = e._map[leaf]
    rules = [(u, w) for u, w in e.rules if u != leaf]
    rules.extend((leaf + t, v + t) for t in rel)
    return Element(e.n, rules)


def apply_point(e: Element, p: Point) -> Point:
    return e(p)


def order(e: Element) -> Optional[int]:
    """Order of the element, or None when infinite.

    A revealing pair has empty tree differences exactly for the torsion
    elements, in which case the order is the lcm of the neutral orbit lengths.
    """
    from .revealing import make_revealing
    import math

    rp = make_revealing(e)
    if rp.components:
        return None
    return math.lcm(*(len(orbit) for orbit in rp.neutral_orbits))


def random_element(n: int, size: int, seed: int) -> Element:
    """Deterministic random reduced element with at most size+1 domain leaves."""
    check_arity(n)
    if size < 1:
        raise ValueError("size must be >= 1")
    rng = random.Random(seed)
    expansions = max(1, size // (n - 1))

    def rand_code() -> list[str]:
        leaves = [""]
        for _ in range(expansions):
            i = rng.randrange(len(leaves))
            u = leaves.pop(i)
            leaves.extend(u + d for d in DIGITS[:n])
        return sorted(leaves)

    dom = rand_code()
    ran = rand_code()
    rng.shuffle(ran)
    return Element(n, zip(dom, ran)).reduce()


# -- text codec ------------------------------------------------------------


def parse_element(text: str) -> Element:
    """Parse the element file format.

    First nonblank line is `V <n>`; every further nonblank line is
    `<domain> -> <range>` with addresses over the digits 0..n-1 and `e` for
    the root.  Lines starting with `#` are comments.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty element text")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "V":
        raise ValueError(f"bad header {lines[0]!r}, expected 'V <n>'")
    try:
        n = int(head[1])
    except ValueError:
        raise ValueError(f"bad arity {head[1]!r}") from None
    check_arity(n)
    rules = []
    for ln in lines[1:]:
        if "->" not in ln:
            raise ValueError(f"bad rule line {ln!r}, expected '<domain> -> <range>'")
        left, right = ln.split("->", 1)
        rules.append((parse_addr(left, n), parse_addr(right, n)))
    if not rules:
        raise ValueError("element text has no rules")
    return Element(n, rules)


def serialize_element(e: Element) -> str:
    lines = [f"V {e.n}"]
    lines.extend(f"{addr_str(u)} -> {addr_str(v)}" for u, v in e.rules)
    return "\n".join(lines) + "\n"
