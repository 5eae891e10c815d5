"""Magic completion of partially labelled graphs, and its cycle-level moves.

The completion runs one stage per distance, in time order.  At the stage of
distance d, every unlabelled pair that closes a fork evaluating to d under the
magic operation receives d; all fills within a stage are computed from the
labelling as it stood when the stage began.  Pairs never relabel.

A *step* performs the first such fill on a standalone cycle, shrinking it by
one edge; an *inverse step* expands one edge back into a fork, provided the new
fork is the first thing the algorithm would collapse.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import EdgeLabelledGraph, Pair, canonical_cycle
from .magic import MagicContext

Cycle = tuple[int, ...]


@dataclass(frozen=True)
class CompletionTrace:
    """Per-stage fill log. Only stages that filled something are recorded."""

    stages: tuple[tuple[int, int, tuple[Pair, ...]], ...]  # (stage, distance, pairs)
    fallback_pairs: tuple[Pair, ...] = ()

    def to_json_obj(self) -> dict:
        return {
            "stages": [
                {"stage": s, "distance": d, "pairs": [list(p) for p in pairs]}
                for s, d, pairs in self.stages
            ],
            "fallback_pairs": [list(p) for p in self.fallback_pairs],
        }


def magic_complete(
    ctx: MagicContext, g: EdgeLabelledGraph
) -> tuple[EdgeLabelledGraph, CompletionTrace]:
    """Run the staged completion and return the complete graph plus its trace.

    Pairs that no fork ever reaches (for instance across disconnected parts)
    are still unlabelled after the last stage; they receive the magic distance
    M and are reported in fallback_pairs.
    """
    if g.max_label() > ctx.delta:
        raise ValueError(f"graph labels exceed delta={ctx.delta}")
    labels = g.labels
    all_pairs = g.pairs()
    stages = []
    for stage, d in enumerate(ctx.permutation, 1):
        prev = dict(labels)
        filled = []
        for x, y in all_pairs:
            if (x, y) in prev:
                continue
            for z in range(g.n):
                if z == x or z == y:
                    continue
                lxz = prev.get((x, z) if x < z else (z, x))
                lyz = prev.get((y, z) if y < z else (z, y))
                if lxz is None or lyz is None:
                    continue
                if ctx.oplus(lxz, lyz) == d:
                    labels[(x, y)] = d
                    filled.append((x, y))
                    break
        if filled:
            stages.append((stage, d, tuple(filled)))
    fallback = tuple(p for p in all_pairs if p not in labels)
    for p in fallback:
        labels[p] = ctx.m
    completed = EdgeLabelledGraph(g.n, [(u, v, l) for (u, v), l in labels.items()])
    return completed, CompletionTrace(tuple(stages), fallback)


def _adjacent_values(ctx: MagicContext, cycle: Cycle) -> list[int]:
    k = len(cycle)
    return [ctx.oplus(cycle[j], cycle[(j + 1) % k]) for j in range(k)]


def first_stage_value(ctx: MagicContext, cycle: Cycle) -> int:
    """The earliest-stage value among all adjacent label pairs of the cycle."""
    return min(_adjacent_values(ctx, cycle), key=ctx.stage_of)


def steps(ctx: MagicContext, cycle: Cycle) -> list[Cycle]:
    """All one-edge-shorter cycles a first-stage fill can produce.

    On a triangle every vertex pair is adjacent, so nothing can be filled and
    the list is empty.  Results are canonical and duplicate-free.
    """
    cycle = tuple(cycle)
    k = len(cycle)
    if k < 3:
        raise ValueError("a cycle has at least 3 edges")
    if k == 3:
        return []
    vals = _adjacent_values(ctx, cycle)
    target = min(vals, key=ctx.stage_of)
    out = set()
    for j, v in enumerate(vals):
        if v != target:
            continue
        if j + 1 < k:
            nxt = cycle[:j] + (v,) + cycle[j + 2 :]
        else:  # pair (cycle[-1], cycle[0]) wraps around
            nxt = cycle[1 : k - 1] + (v,)
        out.add(canonical_cycle(nxt))
    return sorted(out)


def inverse_steps(ctx: MagicContext, cycle: Cycle, max_edges: int) -> list[Cycle]:
    """All one-edge-longer cycles from which a step can produce this one.

    Each result replaces one edge p by a fork (q, r) with q (+) r = p such that
    p is the first-stage value of the expanded cycle.  Results with more than
    max_edges edges are not generated.
    """
    cycle = tuple(cycle)
    k = len(cycle)
    if k < 3:
        raise ValueError("a cycle has at least 3 edges")
    if k + 1 > max_edges:
        return []
    out = set()
    for idx, p in enumerate(cycle):
        for q in range(1, ctx.delta + 1):
            for r in range(1, ctx.delta + 1):
                if ctx.oplus(q, r) != p:
                    continue
                cand = cycle[:idx] + (q, r) + cycle[idx + 1 :]
                if first_stage_value(ctx, cand) == p:
                    out.add(canonical_cycle(cand))
    return sorted(out)


def has_tension(ctx: MagicContext, cycle: Cycle) -> bool:
    """True when some adjacent label pair evaluates away from M."""
    cycle = tuple(cycle)
    if len(cycle) < 3:
        raise ValueError("a cycle has at least 3 edges")
    return any(v != ctx.m for v in _adjacent_values(ctx, cycle))
