"""Signed overlap graphs of legal strings, with a brute-force realism oracle."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from . import kernels, pointers
from .errors import ParseError, RealismError

DEFAULT_MAX_KAPPA = 8


def _max_kappa_default() -> int:
    return int(os.environ.get("GENEASM_MAX_KAPPA", str(DEFAULT_MAX_KAPPA)))


@dataclass(frozen=True)
class OverlapGraph:
    """Vertex-signed simple graph on a set of pointer magnitudes."""

    vertices: frozenset[int]
    positive: frozenset[int]
    edges: frozenset[tuple[int, int]]  # each pair stored as (min, max)

    def __post_init__(self):
        if not self.positive <= self.vertices:
            raise ValueError("positive vertices must be vertices")
        for p, q in self.edges:
            if p == q:
                raise ValueError("self-loops are not allowed")
            if p > q:
                raise ValueError("edge pairs must be stored (min, max)")
            if p not in self.vertices or q not in self.vertices:
                raise ValueError(f"edge ({p}, {q}) leaves the vertex set")

    @property
    def negative(self) -> frozenset[int]:
        return self.vertices - self.positive

    def sign(self, p: int) -> str:
        if p not in self.vertices:
            raise ValueError(f"{p} is not a vertex")
        return "+" if p in self.positive else "-"

    def neighbors(self, q: int) -> frozenset[int]:
        if q not in self.vertices:
            raise ValueError(f"{q} is not a vertex")
        out = set()
        for a, b in self.edges:
            if a == q:
                out.add(b)
            elif b == q:
                out.add(a)
        return frozenset(out)

    def has_edge(self, p: int, q: int) -> bool:
        return (min(p, q), max(p, q)) in self.edges

    def components(self) -> list[frozenset[int]]:
        """Connected components, ordered by smallest vertex."""
        seen: set[int] = set()
        comps = []
        for start in sorted(self.vertices):
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

    def is_discrete(self) -> bool:
        return not self.edges

    def contiguous_domain(self) -> bool:
        """True iff the vertex set is exactly {2, ..., kappa}."""
        return self.vertices == frozenset(range(2, len(self.vertices) + 2))


def make_edge(p: int, q: int) -> tuple[int, int]:
    if p == q:
        raise ValueError("self-loops are not allowed")
    return (p, q) if p < q else (q, p)


def overlap_graph(u) -> OverlapGraph:
    """Overlap graph of a legal string: overlapping pairs, signed by polarity."""
    u = tuple(u)
    dom = pointers.domain(u)
    pos = pointers.positive_set(u)
    edges = set()
    for p in sorted(dom):
        for q in pointers.overlap_set(u, p):
            edges.add(make_edge(p, q))
    return OverlapGraph(vertices=dom, positive=pos, edges=frozenset(edges))


def gamma_overlap_set(g: OverlapGraph, q: int) -> frozenset[int]:
    """Neighbor set of q, the graph-side analogue of the string overlap set."""
    return g.neighbors(q)


def is_realistic_overlap(g: OverlapGraph, max_kappa: int | None = None, scan=None):
    """Search all kappa! * 2^kappa arrangements for one encoding to g.

    Returns a witness arrangement or None.  Graphs whose vertex set is not
    exactly {2..kappa} are rejected immediately (encoded strings never have
    domain gaps).  This is a test oracle; kappa is capped (default 8,
    overridable via the argument or GENEASM_MAX_KAPPA).
    """
    if max_kappa is None:
        max_kappa = _max_kappa_default()
    if not g.vertices or not g.contiguous_domain():
        return None
    kappa = len(g.vertices) + 1
    if kappa > max_kappa:
        raise ValueError(
            f"kappa={kappa} exceeds the scan cap {max_kappa}; raise max_kappa to override"
        )
    adjacency = {p: 0 for p in range(2, kappa + 1)}
    for p, q in g.edges:
        adjacency[p] |= 1 << q
        adjacency[q] |= 1 << p
    positive_mask = 0
    for p in g.positive:
        positive_mask |= 1 << p
    return kernels.scan_for_arrangement(adjacency, positive_mask, kappa, scan=scan)


def require_realistic(g: OverlapGraph, max_kappa: int | None = None):
    arr = is_realistic_overlap(g, max_kappa=max_kappa)
    if arr is None:
        raise RealismError("overlap graph is not realistic")
    return arr


# ---------------------------------------------------------------------------
# JSON wire format

def emit_overlap_json(g: OverlapGraph) -> str:
    """Canonical JSON: vertices sorted by magnitude, edge pairs sorted."""
    payload = {
        "vertices": [{"p": p, "sign": g.sign(p)} for p in sorted(g.vertices)],
        "edges": [[p, q] for p, q in sorted(g.edges)],
    }
    return json.dumps(payload, separators=(",", ":"))


def parse_overlap_json(text: str) -> OverlapGraph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict) or set(payload) != {"vertices", "edges"}:
        raise ParseError("overlap graph JSON needs exactly 'vertices' and 'edges'")
    vertices = set()
    positive = set()
    for entry in payload["vertices"]:
        if not isinstance(entry, dict) or set(entry) != {"p", "sign"}:
            raise ParseError(f"malformed vertex entry {entry!r}")
        p = entry["p"]
        if not isinstance(p, int) or p < 2:
            raise ParseError(f"vertex magnitude must be an integer >= 2, got {p!r}")
        if p in vertices:
            raise ParseError(f"duplicate vertex {p}")
        if entry["sign"] not in ("+", "-"):
            raise ParseError(f"vertex sign must be '+' or '-', got {entry['sign']!r}")
        vertices.add(p)
        if entry["sign"] == "+":
            positive.add(p)
    edges = set()
    for pair in payload["edges"]:
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, int) for x in pair)
        ):
            raise ParseError(f"malformed edge {pair!r}")
        p, q = pair
        if p == q:
            raise ParseError(f"self-loop on {p}")
        if p not in vertices or q not in vertices:
            raise ParseError(f"edge ({p}, {q}) references a missing vertex")
        edges.add(make_edge(p, q))
    return OverlapGraph(
        vertices=frozenset(vertices),
        positive=frozenset(positive),
        edges=frozenset(edges),
    )
