"""Bisimulation between finite models.

Two related worlds must agree on every atom mentioned by either model
(all other atoms are false everywhere by convention) and must be able to
mimic each other's transitions inside the relation. The largest
bisimulation is computed by greatest-fixpoint deletion: start from all
atom-agreeing pairs and drop pairs violating a zig-zag clause until
stable. Bisimilar worlds satisfy the same modal formulas, which is what
lets a countermodel be transported onto any relabeled world space.
"""

from __future__ import annotations

from dataclasses import dataclass

from .kripke import Model


@dataclass(frozen=True)
class BisimRelation:
    pairs: frozenset[tuple[int, int]]


def _atom_agree(m1: Model, m2: Model, w1: int, w2: int) -> bool:
    for a in set(m1.val) | set(m2.val):
        if (w1 in m1.val.get(a, frozenset())) != (w2 in m2.val.get(a, frozenset())):
            return False
    return True


def _zigzag_ok(m1: Model, m2: Model, pairs, w1: int, w2: int) -> bool:
    for w1s in m1.frame.worlds:
        if (w1, w1s) in m1.frame.rel and not any(
            (w2, w2s) in m2.frame.rel and (w1s, w2s) in pairs
            for w2s in m2.frame.worlds
        ):
            return False
    for w2s in m2.frame.worlds:
        if (w2, w2s) in m2.frame.rel and not any(
            (w1, w1s) in m1.frame.rel and (w1s, w2s) in pairs
            for w1s in m1.frame.worlds
        ):
            return False
    return True


def is_bisimulation(m1: Model, m2: Model, z: BisimRelation) -> bool:
    """Every pair agrees on atoms and both simulation clauses hold within z."""
    for w1, w2 in z.pairs:
        if w1 not in m1.frame.worlds or w2 not in m2.frame.worlds:
            raise ValueError(f"ill-typed pair: ({w1}, {w2})")
    return all(
        _atom_agree(m1, m2, w1, w2) and _zigzag_ok(m1, m2, z.pairs, w1, w2)
        for w1, w2 in z.pairs
    )


def largest_bisimulation(m1: Model, m2: Model) -> BisimRelation:
    """Greatest fixpoint: all atom-agreeing pairs, refined until stable.

    The result is a bisimulation and contains every bisimulation between
    the two models.
    """
    pairs = {
        (w1, w2)
        for w1 in m1.frame.worlds
        for w2 in m2.frame.worlds
        if _atom_agree(m1, m2, w1, w2)
    }
    while True:
        bad = {p for p in pairs if not _zigzag_ok(m1, m2, pairs, *p)}
        if not bad:
            return BisimRelation(frozenset(pairs))
        pairs -= bad


def bisimilar(m1: Model, w1: int, m2: Model, w2: int) -> bool:
    """Membership of (w1, w2) in the largest bisimulation."""
    if w1 not in m1.frame.worlds:
        raise ValueError(f"unknown world id: {w1}")
    if w2 not in m2.frame.worlds:
        raise ValueError(f"unknown world id: {w2}")
    return (w1, w2) in largest_bisimulation(m1, m2).pairs
