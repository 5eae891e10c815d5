"""Forbidden cycle families and the obstruction set for completion.

Family membership of a cycle depends only on its label multiset: a cycle
belongs to a family when some split of its labels into distinguished edges
d_1, d_2, ... and filler edges x_1, ..., x_k satisfies the family inequality.
The obstruction set is the union of families active for the parameter tuple:
a graph admits a completion exactly when no cycle of the set maps
homomorphically into it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .graphs import EdgeLabelledGraph, canonical_cycle, closed_walks_with_vertices
from .params import AdmissibilityCase, ParameterSequence

Cycle = tuple[int, ...]

SPECIAL_PENTAGON: Cycle = (5, 5, 5, 5, 5)


class FamilyTag(enum.Enum):
    NON_METRIC = "NonMetric"
    C_CYCLE = "C"
    C0_CYCLE = "C0"
    C1_CYCLE = "C1"
    K1_CYCLE = "K1"
    K2_CYCLE = "K2"
    SPECIAL_5 = "Special5"


@dataclass(frozen=True)
class FamilyWitness:
    """One qualifying decomposition: d_edges and x_edges partition the labels."""

    cycle: Cycle
    tag: FamilyTag
    n: int
    d_edges: tuple[int, ...]
    x_edges: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.x_edges)

    def to_json_obj(self) -> dict:
        return {
            "tag": self.tag.value,
            "n": self.n,
            "d_edges": list(self.d_edges),
            "x_edges": list(self.x_edges),
        }


def active_tags(p: ParameterSequence) -> frozenset[FamilyTag]:
    """Families making up the obstruction set for this tuple.

    Adjacent C0, C1 use the single C family; a wider gap uses C0 and C1 with
    one distinguished triple each; the delta = 5 case IIB tuple additionally
    forbids the pentagon with all labels 5.
    """
    if not p.is_admissible:
        raise ValueError(f"parameters {p} are not admissible")
    if p.c_prime - p.c == 1:
        return frozenset(
            {FamilyTag.NON_METRIC, FamilyTag.C_CYCLE, FamilyTag.K1_CYCLE, FamilyTag.K2_CYCLE}
        )
    base = frozenset(
        {
            FamilyTag.NON_METRIC,
            FamilyTag.C0_CYCLE,
            FamilyTag.C1_CYCLE,
            FamilyTag.K1_CYCLE,
            FamilyTag.K2_CYCLE,
        }
    )
    if p.delta > 5 or p.case is AdmissibilityCase.CASE_III:
        return base
    # Remaining admissible shape: delta = 5, case IIB.
    return base | {FamilyTag.SPECIAL_5}


def _prefix_desc(labels: Cycle) -> tuple[tuple[int, ...], int]:
    """Descending sort plus prefix sums; pre[s] = sum of the s largest."""
    desc = tuple(sorted(labels, reverse=True))
    pre = [0]
    for l in desc:
        pre.append(pre[-1] + l)
    return tuple(pre), sum(labels)


def _tag_holds(p: ParameterSequence, tag: FamilyTag, labels: Cycle) -> bool:
    """Fast multiset test: the best decomposition distinguishes the largest
    labels, so only top-segment sums need checking."""
    pre, total = _prefix_desc(labels)
    ln = len(labels)
    cm1 = p.c - 1
    if tag is FamilyTag.NON_METRIC:
        return 2 * pre[1] > total
    if tag is FamilyTag.K1_CYCLE:
        return total % 2 == 1 and 2 * pre[1] <= total and total < 2 * p.k1
    if tag is FamilyTag.K2_CYCLE:
        if total % 2 == 0:
            return False
        return any(
            2 * pre[2 * n + 2] - total > 2 * p.k2 + n * cm1 for n in range((ln - 2) // 2 + 1)
        )
    if tag is FamilyTag.C_CYCLE:
        return any(2 * pre[2 * n + 1] - total > n * cm1 for n in range(1, (ln - 1) // 2 + 1))
    if tag is FamilyTag.C0_CYCLE:
        return total % 2 == 0 and 2 * pre[3] - total > p.c0 - 1
    if tag is FamilyTag.C1_CYCLE:
        return total % 2 == 1 and 2 * pre[3] - total > p.c1 - 1
    if tag is FamilyTag.SPECIAL_5:
        return p.delta == 5 and tuple(sorted(labels)) == SPECIAL_PENTAGON
    raise AssertionError(tag)


def is_forbidden(p: ParameterSequence, cycle: Cycle) -> bool:
    """Membership of the cycle in the obstruction set of p."""
    cycle = tuple(cycle)
    if len(cycle) < 3:
        raise ValueError("a cycle has at least 3 edges")
    tags = active_tags(p)
    return any(_tag_holds(p, tag, cycle) for tag in tags)


def _distinct_subsets(desc: Cycle, size: int) -> Iterator[Cycle]:
    """Distinct sub-multisets of the given size, as descending tuples."""
    seen = set()
    for comb in combinations(desc, size):
        if comb not in seen:
            seen.add(comb)
            yield comb


def _remove(desc: Cycle, part: Cycle) -> Cycle:
    rest = list(desc)
    for x in part:
        rest.remove(x)
    return tuple(rest)


def classify_cycle(p: ParameterSequence, cycle: Cycle) -> list[FamilyWitness]:
    """Every qualifying (tag, n, decomposition), duplicate-free and sorted.

    Decompositions are over the label multiset; position in the cycle does not
    matter.  n = 0 instances of the C, C0 and C1 inequalities are exactly the
    non-metric cycles and are reported under the NonMetric tag.
    """
    cycle = tuple(cycle)
    if len(cycle) < 3:
        raise ValueError("a cycle has at least 3 edges")
    canon = canonical_cycle(cycle)
    desc = tuple(sorted(cycle, reverse=True))
    total = sum(desc)
    ln = len(desc)
    cm1 = p.c - 1
    out: list[FamilyWitness] = []

    for a in sorted(set(desc), reverse=True):
        if 2 * a > total:
            out.append(
                FamilyWitness(canon, FamilyTag.NON_METRIC, 0, (a,), _remove(desc, (a,)))
            )
    if total % 2 == 1 and 2 * desc[0] <= total and total < 2 * p.k1:
        out.append(FamilyWitness(canon, FamilyTag.K1_CYCLE, 0, (), desc))
    if total % 2 == 1:
        for n in range((ln - 2) // 2 + 1):
            for d in _distinct_subsets(desc, 2 * n + 2):
                if 2 * sum(d) - total > 2 * p.k2 + n * cm1:
                    out.append(
                        FamilyWitness(canon, FamilyTag.K2_CYCLE, n, d, _remove(desc, d))
                    )
    for n in range(1, (ln - 1) // 2 + 1):
        for d in _distinct_subsets(desc, 2 * n + 1):
            if 2 * sum(d) - total > n * cm1:
                out.append(FamilyWitness(canon, FamilyTag.C_CYCLE, n, d, _remove(desc, d)))
    parity_tag = FamilyTag.C0_CYCLE if total % 2 == 0 else FamilyTag.C1_CYCLE
    cx = p.c0 if total % 2 == 0 else p.c1
    for d in _distinct_subsets(desc, 3):
        if 2 * sum(d) - total > cx - 1:
            out.append(FamilyWitness(canon, parity_tag, 1, d, _remove(desc, d)))
    if p.delta == 5 and canon == SPECIAL_PENTAGON:
        out.append(FamilyWitness(canon, FamilyTag.SPECIAL_5, 2, SPECIAL_PENTAGON, ()))
    return sorted(out, key=lambda w: (w.tag.value, w.n, w.d_edges))


def _family_edge_bounds(p: ParameterSequence) -> dict[FamilyTag, int]:
    """Largest possible edge count per family, from the inequalities:
    every filler is >= 1 and every distinguished edge is <= delta."""
    d, k1, k2 = p.delta, p.k1, p.k2
    bounds = {
        FamilyTag.NON_METRIC: d,
        FamilyTag.K1_CYCLE: 2 * k1 - 1,
        FamilyTag.K2_CYCLE: 4 * (d - k2),
        FamilyTag.C_CYCLE: 2 * d - 1,
        FamilyTag.C0_CYCLE: 3 + max(-1, 3 * d - p.c0),
        FamilyTag.C1_CYCLE: 3 + max(-1, 3 * d - p.c1),
        FamilyTag.SPECIAL_5: 5,
    }
    return bounds


def walk_bound(p: ParameterSequence) -> int:
    """Edge-count bound B: no obstruction cycle for p is longer than this."""
    bounds = _family_edge_bounds(p)
    return max(3, max(bounds[t] for t in active_tags(p)))


def _distinct_perms(pool: Cycle) -> Iterator[Cycle]:
    if not pool:
        yield ()
        return
    prev = None
    for i, x in enumerate(pool):
        if x == prev:
            continue
        prev = x
        for rest in _distinct_perms(pool[:i] + pool[i + 1 :]):
            yield (x,) + rest


def _arrangements(ms: Cycle) -> set[Cycle]:
    """Distinct cycles realizing the multiset, in canonical form.  Canonical
    forms start with the least label, so the first position can be pinned."""
    return {canonical_cycle((ms[0],) + rest) for rest in _distinct_perms(ms[1:])}


def enumerate_forbidden(p: ParameterSequence) -> list[Cycle]:
    """Every obstruction cycle for p, canonical, sorted by length then labels."""
    tags = active_tags(p)
    bound = walk_bound(p)
    out: set[Cycle] = set()
    for length in range(3, bound + 1):
        for ms in combinations_with_replacement(range(1, p.delta + 1), length):
            if any(_tag_holds(p, tag, ms) for tag in tags):
                out |= _arrangements(ms)
    return sorted(out, key=lambda c: (len(c), c))


def find_witness(
    p: ParameterSequence, g: EdgeLabelledGraph
) -> tuple[tuple[int, ...], FamilyWitness] | None:
    """First closed walk of g tracing an obstruction cycle, or None.

    Walks are scanned up to walk_bound(p) in (length, vertex sequence) order;
    the returned witness is the first qualifying decomposition of the walk's
    label cycle under a tag active for p.
    """
    if g.max_label() > p.delta:
        raise ValueError(f"graph labels exceed delta={p.delta}")
    tags = active_tags(p)
    for verts, labels in closed_walks_with_vertices(g, walk_bound(p)):
        if is_forbidden(p, labels):
            for w in classify_cycle(p, labels):
                if w.tag in tags:
                    return verts, w
            raise AssertionError("forbidden cycle without an active witness")
    return None
