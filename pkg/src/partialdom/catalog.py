"""Named graphs: the two order-8 graphs A1, A2 attaining gamma = 3n/8, and the
order-14 connected cubic graphs with domination number 5.

Edge lists are hand transcriptions of drawings, so the test suite guards each
entry (order, cubicity, connectivity, domination number, pairwise
non-isomorphism).  Canonical codes, not these labels, identify the graphs.
"""

from __future__ import annotations

import enum

from .graph import Graph


class NamedGraphId(str, enum.Enum):
    A1 = "A1"
    A2 = "A2"
    G14_1 = "G14_1"
    G14_2 = "G14_2"
    G14_3 = "G14_3"
    P7_2 = "P7_2"
    PETERSEN = "Petersen"
    K4 = "K4"

    @classmethod
    def parse(cls, text: str) -> NamedGraphId:
        for member in cls:
            if member.value.lower() == text.lower() or member.name.lower() == text.lower():
                return member
        raise ValueError(f"unknown named graph {text!r}; choose from {[m.value for m in cls]}")


def _labeled(names: list[str], edges: list[tuple[str, str]]) -> Graph:
    index = {name: i for i, name in enumerate(names)}
    return Graph.from_edges(len(names), ((index[a], index[b]) for a, b in edges))


def _cycle(names: list[str]) -> list[tuple[str, str]]:
    return [(names[i], names[(i + 1) % len(names)]) for i in range(len(names))]


def _a1() -> Graph:
    u = [f"u{i}" for i in range(1, 9)]
    chords = [("u1", "u5"), ("u2", "u6"), ("u3", "u7"), ("u4", "u8")]
    return _labeled(u, _cycle(u) + chords)


def _a2() -> Graph:
    u = [f"u{i}" for i in range(1, 9)]
    chords = [("u6", "u8"), ("u3", "u7"), ("u1", "u4"), ("u2", "u5")]
    return _labeled(u, _cycle(u) + chords)


_XYV = [f"x{i}" for i in range(1, 7)] + [f"y{i}" for i in range(1, 7)] + ["v1", "v2"]


def _g14_1() -> Graph:
    edges = (
        _cycle(["x1", "y1", "x2", "y2"])
        + _cycle(["x3", "y3", "x4", "y4"])
        + _cycle(["x5", "y5", "x6", "y6"])
        + [("v1", "y1"), ("v1", "y2"), ("v1", "y3")]
        + [("v2", "y4"), ("v2", "y5"), ("v2", "y6")]
        + [("x1", "x6"), ("x2", "x3"), ("x4", "x5")]
    )
    return _labeled(_XYV, edges)


def _g14_2() -> Graph:
    edges = (
        _cycle(["x1", "y1", "x2", "y2"])
        + _cycle(["x3", "y3", "x4", "y4", "x5", "y5", "x6", "y6"])
        + [("v1", "y1"), ("v1", "y3"), ("v1", "y4")]
        + [("v2", "y2"), ("v2", "y5"), ("v2", "y6")]
        + [("x1", "x6"), ("x2", "x4"), ("x3", "x5")]
    )
    return _labeled(_XYV, edges)


def _g14_3() -> Graph:
    x = [f"x{i}" for i in range(1, 8)]
    y = [f"y{i}" for i in range(1, 8)]
    edges = (
        _cycle(y)
        + [(f"x{i}", f"y{i}") for i in range(1, 8)]
        + [("x1", "x2"), ("x6", "x7")]
        + [(f"x{i}", f"x{i + 2}") for i in range(1, 6)]
    )
    return _labeled(x + y, edges)


def _p7_2() -> Graph:
    # outer heptagon o0..o6, spokes, inner heptagram i_j ~ i_{j+2}
    outer = [f"o{i}" for i in range(7)]
    inner = [f"i{i}" for i in range(7)]
    edges = (
        _cycle(outer)
        + [(f"o{i}", f"i{i}") for i in range(7)]
        + [(f"i{i}", f"i{(i + 2) % 7}") for i in range(7)]
    )
    return _labeled(outer + inner, edges)


def _petersen() -> Graph:
    outer = [f"a{i}" for i in range(5)]
    inner = [f"b{i}" for i in range(5)]
    edges = (
        _cycle(outer)
        + [(f"a{i}", f"b{i}") for i in range(5)]
        + [("b0", "b2"), ("b2", "b4"), ("b4", "b1"), ("b1", "b3"), ("b3", "b0")]
    )
    return _labeled(outer + inner, edges)


def _k4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


_BUILDERS = {
    NamedGraphId.A1: _a1,
    NamedGraphId.A2: _a2,
    NamedGraphId.G14_1: _g14_1,
    NamedGraphId.G14_2: _g14_2,
    NamedGraphId.G14_3: _g14_3,
    NamedGraphId.P7_2: _p7_2,
    NamedGraphId.PETERSEN: _petersen,
    NamedGraphId.K4: _k4,
}

# vertex labels as drawn, in index order
LABELS = {
    NamedGraphId.A1: [f"u{i}" for i in range(1, 9)],
    NamedGraphId.A2: [f"u{i}" for i in range(1, 9)],
    NamedGraphId.G14_1: _XYV,
    NamedGraphId.G14_2: _XYV,
    NamedGraphId.G14_3: [f"x{i}" for i in range(1, 8)] + [f"y{i}" for i in range(1, 8)],
}

GAMMA_FIVE_AT_14 = (NamedGraphId.G14_1, NamedGraphId.G14_2, NamedGraphId.G14_3, NamedGraphId.P7_2)


def named_graph(gid: NamedGraphId | str) -> Graph:
    if not isinstance(gid, NamedGraphId):
        gid = NamedGraphId.parse(gid)
    return _BUILDERS[gid]()


def vertex(gid: NamedGraphId, label: str) -> int:
    return LABELS[gid].index(label)
