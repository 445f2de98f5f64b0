"""A small zoo of named elements used by the tests, scripts, and docs."""

from __future__ import annotations

from .elements import Element

# quadrant labels for the Klein-symmetric element, as the Klein four-group
_KLEIN = {"e": "00", "x": "01", "y": "10", "xy": "11"}
_KLEIN_MUL = {
    ("e", "e"): "e", ("e", "x"): "x", ("e", "y"): "y", ("e", "xy"): "xy",
    ("x", "e"): "x", ("x", "x"): "e", ("x", "y"): "xy", ("x", "xy"): "y",
    ("y", "e"): "y", ("y", "x"): "xy", ("y", "y"): "e", ("y", "xy"): "x",
    ("xy", "e"): "xy", ("xy", "x"): "y", ("xy", "y"): "x", ("xy", "xy"): "e",
}


def x0() -> Element:
    """The standard first generator of V_2: one repeller at 11, one attractor at 00."""
    return Element(2, [("0", "00"), ("10", "01"), ("11", "1")])


def transposition() -> Element:
    """Order-two element swapping the two halves."""
    return Element(2, [("0", "1"), ("1", "0")])


def three_cycle_v3() -> Element:
    """V_3 torsion element with one fixed leaf and one 2-cycle."""
    return Element(3, [("0", "1"), ("1", "0"), ("2", "2")])


def mu() -> Element:
    """Two side-by-side copies of x0, one in each half; two symmetric components."""
    return Element(
        2,
        [
            ("00", "000"), ("010", "001"), ("011", "01"),
            ("10", "100"), ("110", "101"), ("111", "11"),
        ],
    )


def hidden_torsion() -> Element:
    """An order-two element whose reduced table is not revealing.

    Both difference components exist but neither owns a repeller or attractor.
    """
    return Element(2, [("00", "10"), ("01", "11"), ("1", "0")])


def long_orbit_repeller() -> Element:
    """Repelling orbit of length two through a neutral leaf; attractor of length one."""
    return Element(2, [("00", "000"), ("01", "1"), ("10", "001"), ("11", "01")])


def twin_spines() -> Element:
    """Two non-torsion components with spines of different lengths (1 and 01)."""
    return Element(
        2,
        [
            ("00", "000"), ("010", "001"), ("011", "01"),
            ("1001", "10"), ("1000", "1111"), ("101", "110"), ("11", "1110"),
        ],
    )


def klein_symmetric() -> Element:
    """One-component element of V_2 whose torsion centralizer is the Klein four-group.

    Each quadrant carries one repelling and one attracting fixed point; the
    source-to-sink wiring follows the Klein four-group with line multiplicities
    1, 2, 3 distinguishing the three nontrivial directions, so exactly the four
    quadrant translations commute with it.
    """
    src_rel = ["10", "110", "1110", "11110", "111110", "111111"]
    snk_rel = ["01", "001", "0001", "00001", "000001", "000000"]
    rules: list[tuple[str, str]] = []
    for g, q in _KLEIN.items():
        rules.append((q + "00", q + "0"))  # repeller, spine 0
        rules.append((q + "1", q + "11"))  # attractor, spine 1
        targets = [
            _KLEIN_MUL[(g, "e")],
            _KLEIN_MUL[(g, "x")], _KLEIN_MUL[(g, "x")],
            _KLEIN_MUL[(g, "y")], _KLEIN_MUL[(g, "y")], _KLEIN_MUL[(g, "y")],
        ]
        for slot, h in enumerate(targets):
            rules.append((q + "0" + src_rel[slot], _KLEIN[h] + "1" + snk_rel[slot]))
    return Element(2, rules)


def klein_translation(direction: str) -> Element:
    """The quadrant translation by a Klein four-group member; commutes with klein_symmetric()."""
    return Element(
        2, [(_KLEIN[g], _KLEIN[_KLEIN_MUL[(g, direction)]]) for g in _KLEIN]
    )
