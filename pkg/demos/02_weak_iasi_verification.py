#!/usr/bin/env python3
"""Sumset labels and the weak-IASI verifier, on hand-built examples.

A weak IASI labels vertices with finite sets of non-negative integers so
that (a) vertex labels and induced edge sumset labels are injective, and
(b) every edge label is as small as possible: |f(u)+f(v)| equals
max(|f(u)|,|f(v)|), which for integer sets forces one endpoint of every
edge to carry a singleton.
"""

from weakiasi import (
    IntegerSet,
    Labeling,
    cycle_graph,
    is_k_uniform,
    mono_indexed_stats,
    scale_set,
    sumset,
    verify_iasi,
    verify_weak_iasi,
)

a, b = IntegerSet([1, 2]), IntegerSet([1, 3])
print(f"sumset {a} + {b} = {sumset(a, b)}")
print(f"scale  3 * {a} = {scale_set(3, a)}")

c4 = cycle_graph(4)
good = Labeling(c4, {0: [1], 1: [10, 11], 2: [2], 3: [20, 22]})
rep = verify_weak_iasi(c4, good)
print(f"\nC4 with alternating singleton/pair labels: passed={rep.passed}")
r, mono, _ = mono_indexed_stats(c4, good)
print(f"  mono-indexed vertices r={r}, mono-indexed edges={mono}")
print(f"  2-uniform? {is_k_uniform(c4, good, 2)}")

# Two failure modes: a sumset collision, and adjacent non-singletons.
collide = Labeling(c4, {0: [1], 1: [4], 2: [2], 3: [3]})  # 1+4 == 2+3
rep = verify_iasi(c4, collide)
print(f"\nEdge-label collision: passed={rep.passed}")
for kind, witness in rep.violations:
    print(f"  violation {kind}: {witness}")

heavy = Labeling(c4, {0: [1, 2], 1: [4, 8], 2: [3], 3: [50]})
rep = verify_weak_iasi(c4, heavy)
print(f"\nAdjacent non-singletons: passed={rep.passed}")
for kind, witness in rep.violations:
    print(f"  violation {kind}: {witness}")
