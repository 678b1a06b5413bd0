"""Labelled graphs and the compression that turns desire edges into vertices."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class LabelledGraph:
    """Simple labelled graph; vertex ids are arbitrary hashable values."""

    labels: dict
    edges: frozenset  # of frozenset({u, v})

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"edges must join two distinct vertices, got {set(e)!r}")
            for v in e:
                if v not in self.labels:
                    raise ValueError(f"edge endpoint {v!r} is not a vertex")

    @property
    def vertices(self):
        return self.labels.keys()

    def neighbors(self, v):
        out = set()
        for e in self.edges:
            if v in e:
                out |= e - {v}
        return out

    def degree(self, v) -> int:
        return sum(1 for e in self.edges if v in e)

    def components(self) -> list[frozenset]:
        seen = set()
        comps = []
        for start in self.labels:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for w in self.neighbors(v):
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def component_count(self) -> int:
        return len(self.components())

    def label_multiset(self):
        return sorted(self.labels.values())


@dataclass(frozen=True)
class ColouredGraph:
    """Generic 2-edge-coloured graph carrier with the reduction-graph interface."""

    _labels: dict
    reality_edges: tuple = field(default=())
    desire_edges: tuple = field(default=())

    @property
    def vertices(self):
        return tuple(sorted(self._labels))

    def label(self, v):
        return self._labels[v]


def coloured_from_reduction(rg) -> ColouredGraph:
    return ColouredGraph(
        _labels={v: rg.label(v) for v in rg.vertices},
        reality_edges=tuple(rg.reality_edges),
        desire_edges=tuple(rg.desire_edges),
    )


def swap_colours(g) -> ColouredGraph:
    """Exchange the two edge colours (for colour-sensitivity checks)."""
    return ColouredGraph(
        _labels={v: g.label(v) for v in g.vertices},
        reality_edges=tuple(g.desire_edges),
        desire_edges=tuple(g.reality_edges),
    )


def cps(graph) -> LabelledGraph:
    """Collapse each desire edge to a single vertex, keeping reality adjacency.

    Works on any 2-edge-coloured graph whose desire edges join equally
    labelled vertices; two collapsed vertices are adjacent when some
    reality edge runs between distinct desire edges.  Output vertex ids
    are the desire edges themselves, encoded as sorted endpoint pairs.
    """
    desire_of: dict = {}  # vertex -> ids of the desire edges through it
    labels = {}
    for e in graph.desire_edges:
        vid = tuple(sorted(e))
        lab = {graph.label(v) for v in vid}
        if len(lab) != 1:
            raise ValueError(f"desire edge {vid!r} joins differently labelled vertices")
        labels[vid] = lab.pop()
        for v in vid:
            desire_of.setdefault(v, []).append(vid)
    edges = set()
    for e in graph.reality_edges:
        v1, v2 = tuple(e)
        for d1 in desire_of.get(v1, ()):
            for d2 in desire_of.get(v2, ()):
                if d1 != d2:
                    edges.add(frozenset((d1, d2)))
    return LabelledGraph(labels=labels, edges=frozenset(edges))
