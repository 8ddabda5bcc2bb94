"""Finite sumset algebra, vertex labelings, and the weak-IASI verifiers.

A set-label is a finite nonempty set of non-negative integers. A labeling
assigns one set-label to every vertex; the induced label of an edge uv is
the sumset f(u) + f(v). The verifiers never raise on semantic failure:
failure is data carried in a VerificationReport, exceptions are reserved
for malformed input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class LabelError(ValueError):
    """Malformed set-label or labeling input."""


@dataclass(frozen=True, order=True)
class IntegerSet:
    """Nonempty finite set of non-negative integers, kept sorted."""

    elements: tuple

    def __init__(self, elements):
        elems = tuple(sorted(set(elements)))
        if not elems:
            raise LabelError("set-labels must be nonempty")
        if any(not isinstance(x, int) or x < 0 for x in elems):
            raise LabelError("set-labels contain non-negative integers only")
        object.__setattr__(self, "elements", elems)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __repr__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"

    def is_singleton(self):
        return len(self.elements) == 1


def sumset(a, b):
    """All pairwise sums of a and b, deduplicated."""
    return IntegerSet(x + y for x in a for y in b)


def scale_set(r, a):
    """Elementwise multiple r*A. Scaling preserves cardinality, so r >= 1."""
    if r < 1:
        raise LabelError("scale factor must be a positive integer")
    return IntegerSet(r * x for x in a)


class Labeling:
    """Total assignment of set-labels to the vertices of one graph."""

    def __init__(self, graph, labels):
        labels = {v: (s if isinstance(s, IntegerSet) else IntegerSet(s))
                  for v, s in labels.items()}
        missing = [v for v in range(graph.n) if v not in labels]
        if missing:
            raise LabelError(f"labeling misses vertices {missing}")
        extra = [v for v in labels if not 0 <= v < graph.n]
        if extra:
            raise LabelError(f"labeling names unknown vertices {extra}")
        self.graph = graph
        self.labels = dict(labels)

    def __eq__(self, other):
        if not isinstance(other, Labeling):
            return NotImplemented
        return self.graph == other.graph and self.labels == other.labels

    def __getitem__(self, v):
        return self.labels[v]

    def edge_label(self, u, v):
        """Induced edge label f(u) + f(v); uv must be an edge."""
        if not self.graph.has_edge(u, v):
            raise LabelError(f"({u},{v}) is not an edge of the labeled graph")
        return sumset(self.labels[u], self.labels[v])

    def non_singleton_vertices(self):
        return {v for v, s in self.labels.items() if len(s) > 1}

    def to_json_dict(self):
        return {"labels": {str(v): list(s) for v, s in sorted(self.labels.items())}}

    def to_json(self):
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, d, graph):
        try:
            raw = d["labels"]
            labels = {int(v): IntegerSet(s) for v, s in raw.items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise LabelError(f"bad labeling JSON: {exc}")
        return cls(graph, labels)

    @classmethod
    def from_json(cls, text, graph):
        return cls.from_json_dict(json.loads(text), graph)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of an IASI / weak-IASI check.

    violations is a tuple of (kind, witness) pairs with kind in
    {duplicate-vertex-label, duplicate-edge-label, weak-condition-failed,
    adjacent-non-singletons}. passed holds exactly when it is empty.
    """

    passed: bool
    violations: tuple
    mono_vertex_count: int
    mono_edge_count: int
    mono_edges: tuple

    def to_json_dict(self):
        return {
            "passed": self.passed,
            "violations": [[kind, list(w)] for kind, w in self.violations],
            "mono_vertex_count": self.mono_vertex_count,
            "mono_edge_count": self.mono_edge_count,
            "mono_edges": [list(e) for e in self.mono_edges],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict())


def mono_indexed_stats(g, labeling):
    """(mono-vertex count r, mono-edge count, mono-edge list).

    A mono-indexed element has set-indexing number 1; an edge is mono
    exactly when both endpoints carry singletons.
    """
    r = sum(1 for v in range(g.n) if labeling[v].is_singleton())
    mono_edges = [
        (u, v)
        for u, v in g.sorted_edges()
        if labeling[u].is_singleton() and labeling[v].is_singleton()
    ]
    return r, len(mono_edges), mono_edges


def _injectivity_violations(g, labeling):
    violations = []
    by_label = {}
    for v in range(g.n):
        by_label.setdefault(labeling[v].elements, []).append(v)
    for elems, verts in sorted(by_label.items()):
        if len(verts) > 1:
            violations.append(("duplicate-vertex-label", tuple(verts)))
    by_edge_label = {}
    for e in g.sorted_edges():
        by_edge_label.setdefault(labeling.edge_label(*e).elements, []).append(e)
    for elems, es in sorted(by_edge_label.items()):
        if len(es) > 1:
            witness = tuple(x for e in es for x in e)
            violations.append(("duplicate-edge-label", witness))
    return violations


def _report(g, labeling, violations):
    r, mono_count, mono_edges = mono_indexed_stats(g, labeling)
    return VerificationReport(
        passed=not violations,
        violations=tuple(violations),
        mono_vertex_count=r,
        mono_edge_count=mono_count,
        mono_edges=tuple(mono_edges),
    )


def verify_iasi(g, labeling):
    """Check both injectivity conditions: distinct vertex labels and
    distinct induced edge labels."""
    return _report(g, labeling, _injectivity_violations(g, labeling))


def verify_weak_iasi(g, labeling):
    """Check the full weak-IASI condition.

    Passes when the labeling is an IASI and every edge label's cardinality
    equals the max of its endpoint cardinalities. Edges whose endpoints are
    both non-singleton are reported as structural certificates: for integer
    sets |A+B| >= |A|+|B|-1, so such an edge can never satisfy the weak
    condition.
    """
    violations = _injectivity_violations(g, labeling)
    for u, v in g.sorted_edges():
        a, b = labeling[u], labeling[v]
        if len(a) > 1 and len(b) > 1:
            violations.append(("adjacent-non-singletons", (u, v)))
        if len(labeling.edge_label(u, v)) != max(len(a), len(b)):
            violations.append(("weak-condition-failed", (u, v)))
    return _report(g, labeling, violations)


def restrict_labeling(labeling, subgraph, old_ids):
    """Labeling induced on a subgraph returned by Graph.induced_subgraph.

    old_ids[new_vertex] is the original vertex id; labels carry over
    unchanged, so any weak IASI stays one on the restriction.
    """
    if subgraph.n != len(old_ids):
        raise LabelError("old_ids length does not match the subgraph")
    return Labeling(subgraph, {new: labeling[old] for new, old in enumerate(old_ids)})


def is_k_uniform(g, labeling, k):
    """True when every induced edge label has cardinality exactly k."""
    if k < 1:
        raise LabelError("uniformity degree must be a positive integer")
    return all(len(labeling.edge_label(u, v)) == k for u, v in g.edges)
