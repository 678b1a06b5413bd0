"""Reduction graph built directly from a realistic overlap graph.

For a realistic overlap graph on {2..kappa} the compressed reduction
graph of any witness string can be reconstructed from the graph alone.
Vertices come in pairs J_p (off the root chain) and J'_p (on it); the
chain J'_2 - J'_3 - ... - J'_kappa is always present, and every other
edge is characterized by a symmetric-difference equation over the
neighbor sets O(t): an edge between vertices labelled p and q exists
exactly when some admissible index window P satisfies

    XOR of O(t) for t in P  ==  (positives in P) XOR {p} XOR {q}

with P drawn from the consecutive run between p and q extended by an
optional choice P' of the endpoints themselves.  Vertex ids are the
strings "J<p>" and "Jp<p>" so edge lists can be serialized verbatim.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import reduce

from .compress import LabelledGraph
from .errors import ParseError
from .overlap import OverlapGraph

_VERTEX_RE = re.compile(r"^J(p?)([0-9]+)$")


def nonroot_vertex(p: int) -> str:
    return f"J{p}"


def root_vertex(p: int) -> str:
    return f"Jp{p}"


def vertex_sort_key(name: str):
    m = _VERTEX_RE.match(name)
    if not m:
        raise ValueError(f"not a direct-construction vertex id: {name!r}")
    return (int(m.group(2)), 1 if m.group(1) else 0)


def _xor_all(sets):
    return reduce(frozenset.symmetric_difference, sets, frozenset())


@dataclass(frozen=True)
class Witness:
    """A satisfied edge condition: the index set P and the evaluated XOR chain."""

    subset: frozenset[int]
    value: frozenset[int]


def _candidate_subsets(core, optional):
    """The index windows P = core + P' for every P' drawn from optional."""
    optional = sorted(optional)
    out = []
    for mask in range(1 << len(optional)):
        extra = {optional[t] for t in range(len(optional)) if (mask >> t) & 1}
        out.append(frozenset(core) | extra)
    out.sort(key=sorted)
    return out


def _matching_subsets(g: OverlapGraph, core, optional, target) -> list[Witness]:
    hits = []
    for subset in _candidate_subsets(core, optional):
        value = _xor_all(g.neighbors(t) for t in sorted(subset))
        want = (g.positive & subset) ^ frozenset(target)
        if value == want:
            hits.append(Witness(subset=subset, value=value))
    return hits


def _edge_conditions(g: OverlapGraph, kappa: int):
    """Candidate edges with their (core window, optional endpoints, target)."""
    for p in range(2, kappa + 1):
        for q in range(p + 1, kappa + 1):
            yield (nonroot_vertex(p), nonroot_vertex(q)), (
                range(p + 1, q),
                {p, q},
                {p, q},
            )
    for p in range(2, kappa + 1):
        yield (root_vertex(2), nonroot_vertex(p)), (range(2, p), {p}, {p})
        yield (root_vertex(kappa), nonroot_vertex(p)), (range(p + 1, kappa + 1), {p}, {p})
    if kappa > 3:
        yield (root_vertex(2), root_vertex(kappa)), (range(2, kappa + 1), set(), set())


def direct_reduction_graph(g: OverlapGraph) -> LabelledGraph:
    """Evaluate the edge conditions over the whole vertex-pair grid.

    The caller is responsible for realism; on non-realistic input the edge
    set is still computed mechanically but carries no structural guarantee.
    """
    if not g.vertices or not g.contiguous_domain():
        raise ValueError("direct construction needs vertex set {2..kappa}")
    kappa = len(g.vertices) + 1
    labels = {}
    for p in range(2, kappa + 1):
        labels[nonroot_vertex(p)] = p
        labels[root_vertex(p)] = p
    edges = set()
    for p in range(2, kappa):
        edges.add(frozenset({root_vertex(p), root_vertex(p + 1)}))
    for (a, b), (core, optional, target) in _edge_conditions(g, kappa):
        if _matching_subsets(g, core, optional, target):
            edges.add(frozenset({a, b}))
    return LabelledGraph(labels=labels, edges=frozenset(edges))


def condition_witnesses(g: OverlapGraph, edge) -> list[Witness]:
    """All index windows satisfying the condition for one candidate edge.

    The candidate is a pair of vertex ids such as ("J2", "J6") or
    ("Jp2", "Jp7"); root-chain edges {J'_p, J'_(p+1)} hold unconditionally
    and report a single empty witness.
    """
    if not g.vertices or not g.contiguous_domain():
        raise ValueError("direct construction needs vertex set {2..kappa}")
    kappa = len(g.vertices) + 1
    a, b = sorted(edge, key=vertex_sort_key)
    for name in (a, b):
        k, _ = vertex_sort_key(name)
        if not 2 <= k <= kappa:
            raise ValueError(f"vertex {name!r} is outside 2..{kappa}")
    ka, root_a = vertex_sort_key(a)[0], a.startswith("Jp")
    kb, root_b = vertex_sort_key(b)[0], b.startswith("Jp")
    if root_a and root_b:
        if kb == ka + 1:
            return [Witness(subset=frozenset(), value=frozenset())]
        if (ka, kb) == (2, kappa) and kappa > 3:
            return _matching_subsets(g, range(2, kappa + 1), set(), set())
        return []
    if not root_a and not root_b:
        if ka == kb:
            return []
        return _matching_subsets(g, range(ka + 1, kb), {ka, kb}, {ka, kb})
    root_k, other_k = (ka, kb) if root_a else (kb, ka)
    if root_k == 2:
        return _matching_subsets(g, range(2, other_k), {other_k}, {other_k})
    if root_k == kappa:
        return _matching_subsets(g, range(other_k + 1, kappa + 1), {other_k}, {other_k})
    return []


# ---------------------------------------------------------------------------
# JSON wire format

def emit_direct_json(graph: LabelledGraph) -> str:
    kappa = max(graph.labels.values())
    pairs = [sorted(e, key=vertex_sort_key) for e in graph.edges]
    pairs.sort(key=lambda pair: tuple(vertex_sort_key(v) for v in pair))
    payload = {"kappa": kappa, "edges": [[a, b] for a, b in pairs]}
    return json.dumps(payload, separators=(",", ":"))


def parse_direct_json(text: str) -> LabelledGraph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict) or set(payload) != {"kappa", "edges"}:
        raise ParseError("direct graph JSON needs exactly 'kappa' and 'edges'")
    kappa = payload["kappa"]
    if not isinstance(kappa, int) or kappa < 2:
        raise ParseError(f"kappa must be an integer >= 2, got {kappa!r}")
    labels = {}
    for p in range(2, kappa + 1):
        labels[nonroot_vertex(p)] = p
        labels[root_vertex(p)] = p
    edges = set()
    for pair in payload["edges"]:
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"malformed edge {pair!r}")
        for name in pair:
            if name not in labels:
                raise ParseError(f"unknown vertex {name!r}")
        if pair[0] == pair[1]:
            raise ParseError(f"self-loop on {pair[0]!r}")
        edges.add(frozenset(pair))
    return LabelledGraph(labels=labels, edges=frozenset(edges))
