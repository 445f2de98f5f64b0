"""Addresses in the rooted infinite n-ary tree and eventually periodic boundary points.

An address is a word over the digits 0..n-1, stored as a plain string; the
empty string names the root.  The cone of an address is the set of boundary
points of the tree passing through it.  A nonempty, pairwise prefix-free,
complete set of addresses is a prefix code: the leaf set of a finite n-ary
tree, and a partition of the boundary into cones.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

DIGITS = "0123456789"


def check_arity(n: int) -> int:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"arity must be an integer >= 2, got {n!r}")
    if n > 10:
        raise ValueError(f"arity {n} exceeds 10, not representable in the digit codec")
    return n


def check_address(word: str, n: int) -> str:
    for ch in word:
        if ch not in DIGITS[:n]:
            if ch in DIGITS:
                raise ValueError(f"letter {ch!r} out of range for arity {n} in address {word!r}")
            raise ValueError(f"non-digit letter {ch!r} in address {word!r}")
    return word


def is_prefix(p: str, q: str) -> bool:
    return q.startswith(p)


def is_strict_prefix(p: str, q: str) -> bool:
    return len(p) < len(q) and q.startswith(p)


def children(u: str, n: int) -> list[str]:
    return [u + d for d in DIGITS[:n]]


def code_measure(leaves: Iterable[str], n: int) -> Fraction:
    """Total boundary measure of a set of pairwise disjoint cones."""
    return sum((Fraction(1, n ** len(u)) for u in leaves), Fraction(0))


def is_antichain(leaves: Sequence[str]) -> bool:
    ordered = sorted(leaves)
    return all(not ordered[i + 1].startswith(ordered[i]) for i in range(len(ordered) - 1))


def validate_prefix_code(leaves: Sequence[str], n: int, what: str = "prefix code") -> None:
    """Raise ValueError unless `leaves` is a complete prefix code for arity n."""
    if not leaves:
        raise ValueError(f"{what} is empty")
    for u in leaves:
        check_address(u, n)
    if len(set(leaves)) != len(leaves):
        raise ValueError(f"{what} has repeated addresses")
    ordered = sorted(leaves)
    for i in range(len(ordered) - 1):
        if ordered[i + 1].startswith(ordered[i]):
            raise ValueError(
                f"{what} is overlapping: {ordered[i] or 'e'} is a prefix of {ordered[i + 1]}"
            )
    if code_measure(ordered, n) != 1:
        raise ValueError(f"{what} is incomplete: cones do not cover the whole boundary")


def covering_code(marks: Sequence[str], n: int) -> list[str]:
    """Minimal complete prefix code in which every mark appears as a leaf.

    The marks must be pairwise prefix-incomparable.
    """
    marks = sorted(marks)
    out: list[str] = []

    def build(u: str) -> None:
        if any(is_strict_prefix(u, m) for m in marks):
            for c in children(u, n):
                build(c)
        else:
            out.append(u)

    build("")
    return out


def complement_cones(cones: Sequence[str], n: int) -> list[str]:
    """Maximal cones of the complement of a disjoint cone set."""
    inside = set(cones)
    return [u for u in covering_code(cones, n) if u not in inside]


def primitive_root(word: str) -> str:
    """Shortest word whose power equals `word`."""
    m = len(word)
    for d in range(1, m + 1):
        if m % d == 0 and word == word[:d] * (m // d):
            return word[:d]
    return word


class Point:
    """An eventually periodic boundary point, pre + per^infinity.

    Instances are normalized on construction: the period is primitive and the
    preperiod is shortest possible, so two Points are equal iff their fields
    coincide.
    """

    __slots__ = ("pre", "per")

    def __init__(self, pre: str, per: str):
        if not per:
            raise ValueError("period word must be nonempty")
        per = primitive_root(per)
        while pre and pre[-1] == per[-1]:
            per = per[-1] + per[:-1]
            pre = pre[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    def __setattr__(self, *a):
        raise AttributeError("Point is immutable")

    def __eq__(self, other):
        return isinstance(other, Point) and self.pre == other.pre and self.per == other.per

    def __hash__(self):
        return hash((self.pre, self.per))

    def __repr__(self):
        return f"Point({self.pre!r}, {self.per!r})"

    def __str__(self):
        return f"{self.pre or 'e'}({self.per})*"

    def sort_key(self):
        return (self.pre, self.per)

    def head(self, k: int) -> str:
        """First k letters of the infinite word."""
        if k <= len(self.pre):
            return self.pre[:k]
        reps = (k - len(self.pre)) // len(self.per) + 1
        return (self.pre + self.per * reps)[:k]

    def letter(self, i: int) -> str:
        if i < len(self.pre):
            return self.pre[i]
        return self.per[(i - len(self.pre)) % len(self.per)]

    def starts_with(self, addr: str) -> bool:
        return self.head(len(addr)) == addr

    def drop(self, k: int) -> "Point":
        """The point obtained by deleting the first k letters."""
        if k <= len(self.pre):
            return Point(self.pre[k:], self.per)
        j = (k - len(self.pre)) % len(self.per)
        return Point("", self.per[j:] + self.per[:j])

    def replace_prefix(self, old: str, new: str) -> "Point":
        if not self.starts_with(old):
            raise ValueError(f"point {self} does not lie under cone {old or 'e'}")
        tail = self.drop(len(old))
        return Point(new + tail.pre, tail.per)

    def validate(self, n: int) -> "Point":
        check_address(self.pre, n)
        check_address(self.per, n)
        return self


def tail_equivalent(p: Point, q: Point) -> bool:
    """True when the two points agree from some letter onward."""
    pa = primitive_root(p.per)
    qa = primitive_root(q.per)
    if len(pa) != len(qa):
        return False
    return min(pa[i:] + pa[:i] for i in range(len(pa))) == min(
        qa[i:] + qa[:i] for i in range(len(qa))
    )


def addr_str(a: str) -> str:
    """Display form of an address; the root prints as 'e'."""
    return a if a else "e"


def parse_addr(text: str, n: int) -> str:
    text = text.strip()
    if text == "e":
        return ""
    if not text:
        raise ValueError("empty address token; the root is written 'e'")
    return check_address(text, n)
