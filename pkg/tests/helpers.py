"""Shared generators for the test suite: hypothesis strategies and a
seeded random-formula/model sampler used by the acceptance criteria."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from glkit.kripke import Frame, Model
from glkit.syntax import (
    FALSE,
    TRUE,
    And,
    Atom,
    Box,
    Formula,
    Iff,
    Imp,
    Not,
    Or,
    subformulas,
)


def formulas(atom_names=("p", "q", "r"), max_leaves=24) -> st.SearchStrategy[Formula]:
    leaves = st.sampled_from([FALSE, TRUE] + [Atom(a) for a in atom_names])
    return st.recursive(
        leaves,
        lambda kids: st.one_of(
            kids.map(Not),
            kids.map(Box),
            st.tuples(kids, kids).map(lambda t: And(*t)),
            st.tuples(kids, kids).map(lambda t: Or(*t)),
            st.tuples(kids, kids).map(lambda t: Imp(*t)),
            st.tuples(kids, kids).map(lambda t: Iff(*t)),
        ),
        max_leaves=max_leaves,
    )


_UNARY = [Not, Box]
_BINARY = [And, Or, Imp, Iff]


def random_formula(rng: random.Random, max_depth: int, atom_names=("p", "q")) -> Formula:
    """Uniform-ish grammar sampler with a hard depth cap."""
    if max_depth == 0 or rng.random() < 0.3:
        return rng.choice([FALSE, TRUE] + [Atom(a) for a in atom_names])
    kind = rng.randrange(6)
    if kind < 2:
        return _UNARY[kind](random_formula(rng, max_depth - 1, atom_names))
    op = _BINARY[kind - 2]
    return op(
        random_formula(rng, max_depth - 1, atom_names),
        random_formula(rng, max_depth - 1, atom_names),
    )


def box_subformula_count(f: Formula) -> int:
    return sum(1 for g in subformulas(f) if isinstance(g, Box))


def random_guarded_formula(
    rng: random.Random,
    max_depth: int = 4,
    atom_names=("p", "q"),
    max_boxes: int = 3,
) -> Formula:
    """Sample until the distinct Box-subformula count fits the bound."""
    while True:
        f = random_formula(rng, max_depth, atom_names)
        if box_subformula_count(f) <= max_boxes:
            return f


def random_model(rng: random.Random, max_worlds: int = 6, atom_names=("p", "q")) -> Model:
    n = rng.randint(1, max_worlds)
    worlds = frozenset(range(n))
    rel = frozenset(
        (i, j) for i in range(n) for j in range(n) if rng.random() < 0.3
    )
    val = {
        a: frozenset(w for w in range(n) if rng.random() < 0.5) for a in atom_names
    }
    return Model(Frame(worlds, rel), val)
