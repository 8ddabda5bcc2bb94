"""Constructive weak-IASI labelings for the six graph products.

Each planner decides which product vertices get non-singleton labels,
following the corresponding constructive proof; the decisions are recorded
as a LabelPlan whose non-singleton set is independent in the product by
construction (conflicting designations are demoted to singleton and
flagged). Concrete sets are then filled in by assign_concrete_sets, which
guarantees the injectivity conditions regardless of which plan it is given:

  * singleton values come from a Sidon sequence (Mian-Chowla), so
    singleton-singleton edge sums are pairwise distinct;
  * each non-singleton vertex gets a block of consecutive integers placed
    above all singleton pairwise sums, one block per vertex with gaps wide
    enough that shifted blocks from different vertices can never coincide.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graph_core import (
    CoronaVertexMap,
    ProductVertexMap,
    RootedVertexMap,
    cartesian_product,
    corona,
    direct_product,
    is_bipartite,
    lexicographic_product,
    rooted_product,
    strong_product,
)
from .set_label import IntegerSet, LabelError, Labeling, verify_weak_iasi


class PlanError(ValueError):
    """Planner input is not a verified weak IASI, or the plan is unusable."""


@dataclass(frozen=True)
class LabelPlan:
    """Singleton / non-singleton designation for every vertex of a graph.

    demoted records vertices the source procedure wanted non-singleton but
    that had to fall back to singleton to keep the set independent.
    """

    non_singleton: frozenset
    provenance: str
    demoted: frozenset = frozenset()

    def to_json_dict(self):
        d = {
            "non_singleton": sorted(self.non_singleton),
            "provenance": self.provenance,
        }
        if self.demoted:
            d["demoted"] = sorted(self.demoted)
        return d

    def to_json(self):
        return json.dumps(self.to_json_dict())


def _require_weak(g, labeling, who):
    report = verify_weak_iasi(g, labeling)
    if not report.passed:
        raise PlanError(f"{who} labeling is not a weak IASI: {report.violations}")


def _greedy_independent(g, desired, provenance):
    """Keep desired vertices in ascending id order, demoting conflicts."""
    adj = g.adjacency()
    kept = set()
    demoted = set()
    for v in sorted(desired):
        if adj[v] & kept:
            demoted.add(v)
        else:
            kept.add(v)
    return LabelPlan(frozenset(kept), provenance, frozenset(demoted))


def plan_cartesian(g1, l1, g2):
    """Layered pattern for g1 [] g2.

    The product is n2 copies of g1, one per g2-vertex. Copies fall into
    two alternating classes: one class repeats g1's singleton/non-singleton
    pattern, the other inverts it, except that vertices matching an
    endpoint of a mono-indexed edge of g1 stay singleton. When g2 is
    bipartite the classes are its two sides (the even/odd alternation
    along a path, generalized); otherwise index parity is used and the
    unavoidable conflicts between adjacent same-class copies are demoted
    greedily.
    """
    _require_weak(g1, l1, "first factor")
    product, vmap = cartesian_product(g1, g2)
    bip = is_bipartite(g2)
    if bip.is_bipartite:
        side1 = set(bip.sides[1])
        layer_class = [1 if j in side1 else 0 for j in range(g2.n)]
    else:
        layer_class = [j % 2 for j in range(g2.n)]
    non_singleton1 = l1.non_singleton_vertices()
    mono_ends = set()
    for u, v in g1.edges:
        if l1[u].is_singleton() and l1[v].is_singleton():
            mono_ends.update((u, v))
    desired = set()
    for j in range(g2.n):
        for i in range(g1.n):
            if layer_class[j] == 0:
                want = i in non_singleton1
            else:
                want = i not in non_singleton1 and i not in mono_ends
            if want:
                desired.add(vmap.forward(i, j))
    return _greedy_independent(product, desired, "cartesian")


def plan_direct(g1, l1, g2):
    """Every g1-copy of the direct product repeats g1's pattern.

    Two vertices with the same second coordinate are never adjacent in the
    direct product, and non-singletons of l1 are independent in g1, so the
    repeated pattern is independent without demotions.
    """
    _require_weak(g1, l1, "first factor")
    product, vmap = direct_product(g1, g2)
    non_singleton1 = l1.non_singleton_vertices()
    desired = {
        vmap.forward(i, j) for i in non_singleton1 for j in range(g2.n)
    }
    plan = _greedy_independent(product, desired, "direct")
    if plan.demoted:
        raise PlanError("direct-product pattern unexpectedly conflicted")
    return plan


def plan_strong(g1, l1, g2):
    """Copy-by-copy pattern for g1 [x] g2.

    Copy 0 inherits g1's pattern; later copies request the same pattern and
    keep a vertex non-singleton only while it stays independent of already
    planned copies (strong-product edges also join diagonal neighbors, so
    copies adjacent in g2 usually demote most requests).
    """
    _require_weak(g1, l1, "first factor")
    product, vmap = strong_product(g1, g2)
    non_singleton1 = l1.non_singleton_vertices()
    adj = product.adjacency()
    kept = set()
    demoted = set()
    for j in range(g2.n):  # ascending copy order, deterministic greedy
        for i in sorted(non_singleton1):
            pid = vmap.forward(i, j)
            if adj[pid] & kept:
                demoted.add(pid)
            else:
                kept.add(pid)
    return LabelPlan(frozenset(kept), "strong", frozenset(demoted))


def plan_lexicographic(g1, g2, l2):
    """Host an independent family of g1-vertices with g2's pattern.

    In g1 o g2 every vertex of a copy is adjacent to all vertices of the
    copies at g1-neighbors, so only copies hosted on an independent set of
    g1 can carry non-singletons; all other copies are fully singleton.
    Hosts are chosen greedily in ascending g1-vertex order.
    """
    _require_weak(g2, l2, "second factor")
    product, vmap = lexicographic_product(g1, g2)
    adj1 = g1.adjacency()
    hosts = set()
    for u in range(g1.n):
        if not (adj1[u] & hosts):
            hosts.add(u)
    non_singleton2 = l2.non_singleton_vertices()
    desired = {vmap.forward(u, j) for u in hosts for j in non_singleton2}
    plan = _greedy_independent(product, desired, "lexicographic")
    if plan.demoted:
        raise PlanError("lexicographic host pattern unexpectedly conflicted")
    return plan


def plan_corona(g1, l1, g2, l2):
    """Corona pattern: g1 keeps l1's pattern; copies attached to mono
    g1-vertices carry l2's pattern; copies attached to non-singleton
    g1-vertices are fully singleton (1-uniform)."""
    _require_weak(g1, l1, "first factor")
    _require_weak(g2, l2, "second factor")
    product, vmap = corona(g1, g2)
    desired = set(l1.non_singleton_vertices())
    non_singleton2 = l2.non_singleton_vertices()
    for i in range(g1.n):
        if l1[i].is_singleton():
            desired.update(vmap.copy_vertex(i, j) for j in non_singleton2)
    plan = _greedy_independent(product, desired, "corona")
    if plan.demoted:
        raise PlanError("corona pattern unexpectedly conflicted")
    return plan


def plan_rooted(g1, l1, g2, l2, root):
    """Rooted-product pattern.

    Copy i carries l2's pattern. The merged vertex takes l1's designation,
    except that a non-singleton l1 designation over a singleton copy root
    falls back to the root's singleton: the merged vertex is non-singleton
    only when both l1 and l2's root say so.
    """
    _require_weak(g1, l1, "first factor")
    _require_weak(g2, l2, "second factor")
    product, vmap = rooted_product(g1, g2, root)
    root_non_singleton = not l2[root].is_singleton()
    non_singleton2 = l2.non_singleton_vertices() - {root}
    desired = set()
    for i in range(g1.n):
        if not l1[i].is_singleton() and root_non_singleton:
            desired.add(vmap.merged_vertex(i))
        desired.update(vmap.copy_vertex(i, v) for v in non_singleton2)
    plan = _greedy_independent(product, desired, "rooted")
    if plan.demoted:
        raise PlanError("rooted pattern unexpectedly conflicted")
    return plan


# ---------------------------------------------------------------------------
# Concrete set assignment.

_MIAN_CHOWLA_CACHE = [1]
_MIAN_CHOWLA_SUMS = {2}


def mian_chowla(count):
    """First `count` terms of the Mian-Chowla Sidon sequence (1, 2, 5, ...).

    Greedy: each term is the smallest integer keeping all pairwise sums
    (including doubles) distinct. The cache is append-only.
    """
    seq, sums = _MIAN_CHOWLA_CACHE, _MIAN_CHOWLA_SUMS
    while len(seq) < count:
        candidate = seq[-1] + 1
        while True:
            new_sums = {candidate + x for x in seq}
            new_sums.add(2 * candidate)
            if len(new_sums) == len(seq) + 1 and not (new_sums & sums):
                break
            candidate += 1
        seq.append(candidate)
        sums |= new_sums
    return list(seq[:count])


def assign_concrete_sets(g, plan, sizes=None):
    """Turn a plan into an actual labeling that passes verify_weak_iasi.

    sizes optionally maps non-singleton vertices to their label size
    (default 2, minimum 2). Singletons take distinct Sidon values; each
    non-singleton vertex gets its own block of consecutive integers above
    every singleton pairwise sum, blocks spaced so that singleton-shifted
    copies of different blocks stay disjoint.
    """
    non_singleton = set(plan.non_singleton)
    if any(not 0 <= v < g.n for v in non_singleton):
        raise PlanError("plan names vertices outside the graph")
    adj = g.adjacency()
    for v in non_singleton:
        if adj[v] & non_singleton:
            raise PlanError("plan's non-singleton set is not independent")
    sizes = dict(sizes or {})
    for v, size in sizes.items():
        if size < 2:
            raise PlanError(f"non-singleton size for vertex {v} must be >= 2")

    singles = [v for v in range(g.n) if v not in non_singleton]
    sidon = mian_chowla(max(len(singles), 1))
    labels = {v: IntegerSet([sidon[k]]) for k, v in enumerate(singles)}

    max_single = sidon[len(singles) - 1] if singles else 0
    span = max([sizes.get(v, 2) for v in non_singleton], default=2)
    base = 2 * max_single + 1  # above every singleton pairwise sum
    stride = base + span + 1   # shifted blocks of distinct vertices disjoint
    for k, v in enumerate(sorted(non_singleton)):
        offset = base + k * stride
        size = sizes.get(v, 2)
        labels[v] = IntegerSet(range(offset, offset + size))
    return Labeling(g, labels)


def build_labeling(g, plan, sizes=None):
    """assign_concrete_sets plus a verification pass; returns (labeling, report)."""
    labeling = assign_concrete_sets(g, plan, sizes)
    return labeling, verify_weak_iasi(g, labeling)


def optimal_labeling(g, oracle_bound=None):
    """Weak IASI realizing the exact sparing number.

    Runs the exact oracle, turns its witness into a plan, and assigns
    concrete sets; the resulting labeling has exactly sparing(g) mono
    edges.
    """
    from .sparing import sparing_exact

    result = sparing_exact(g, oracle_bound)
    plan = LabelPlan(frozenset(result.witness), "oracle-witness")
    return assign_concrete_sets(g, plan)
