"""Finite explicit Kripke models: forcing, frame predicates, validity oracles.

Frames are plain (worlds, relation) pairs over small integer world ids.
Validity on a frame quantifies over every valuation of the formula's
atoms, so it is an exhaustive oracle and deliberately desk-scale only.
Well-foundedness of the converse relation, undecidable in general, is
replaced by acyclicity, which is equivalent on finite carriers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

from .limits import SizeGuardError
from .syntax import (
    And,
    Atom,
    Box,
    Falsity,
    Formula,
    Iff,
    Imp,
    Not,
    Or,
    Truth,
    atoms,
    parse,
)

# Single-atom instance of the Lob schema; schema validity on a frame is
# equivalent to validity of this instance over all valuations.
LOB_INSTANCE = parse("Box (Box p --> p) --> Box p")


@dataclass(frozen=True)
class Frame:
    worlds: frozenset[int]
    rel: frozenset[tuple[int, int]]


@dataclass(frozen=True, eq=True)
class Model:
    frame: Frame
    val: Mapping[str, frozenset[int]]


@dataclass(frozen=True)
class FrameReport:
    nonempty: bool
    relation_well_typed: bool
    finite: bool
    irreflexive: bool
    transitive: bool
    acyclic: bool
    validates_lob: bool


def holds(m: Model, f: Formula, w: int) -> bool:
    """Forcing: truth of f at world w, by structural recursion."""
    if w not in m.frame.worlds:
        raise ValueError(f"unknown world id: {w}")
    return _holds(m, f, w)


def _holds(m: Model, f: Formula, w: int) -> bool:
    if isinstance(f, Falsity):
        return False
    if isinstance(f, Truth):
        return True
    if isinstance(f, Atom):
        return w in m.val.get(f.name, frozenset())
    if isinstance(f, Not):
        return not _holds(m, f.arg, w)
    if isinstance(f, And):
        return _holds(m, f.left, w) and _holds(m, f.right, w)
    if isinstance(f, Or):
        return _holds(m, f.left, w) or _holds(m, f.right, w)
    if isinstance(f, Imp):
        return (not _holds(m, f.left, w)) or _holds(m, f.right, w)
    if isinstance(f, Iff):
        return _holds(m, f.left, w) == _holds(m, f.right, w)
    if isinstance(f, Box):
        return all(
            _holds(m, f.arg, u)
            for u in m.frame.worlds
            if (w, u) in m.frame.rel
        )
    raise TypeError(f"not a formula: {f!r}")


def holds_in(m: Model, f: Formula) -> bool:
    """f holds at every world of the model (valuation fixed)."""
    return all(_holds(m, f, w) for w in m.frame.worlds)


def valid_on_frame(fr: Frame, f: Formula) -> bool:
    """f holds at every world under every valuation of its atoms."""
    names = sorted(atoms(f))
    ws = sorted(fr.worlds)
    if len(names) * len(ws) > 24:
        raise SizeGuardError(
            f"{len(names)} atoms x {len(ws)} worlds exceeds the valuation sweep limit"
        )
    cells = [(a, w) for a in names for w in ws]
    for bits in itertools.product((False, True), repeat=len(cells)):
        val: dict[str, set[int]] = {a: set() for a in names}
        for (a, w), b in zip(cells, bits):
            if b:
                val[a].add(w)
        m = Model(fr, {a: frozenset(s) for a, s in val.items()})
        if not holds_in(m, f):
            return False
    return True


def relation_well_typed(fr: Frame) -> bool:
    return all(x in fr.worlds and y in fr.worlds for x, y in fr.rel)


def irreflexive(fr: Frame) -> bool:
    return all(x != y for x, y in fr.rel)


def transitive(fr: Frame) -> bool:
    succ: dict[int, set[int]] = {}
    for x, y in fr.rel:
        succ.setdefault(x, set()).add(y)
    return all(
        z in succ.get(x, ())
        for x, y in fr.rel
        for z in succ.get(y, ())
    )


def acyclic(fr: Frame) -> bool:
    """No directed cycle in the relation (iterative three-color DFS)."""
    succ: dict[int, list[int]] = {}
    nodes = set(fr.worlds)
    for x, y in fr.rel:
        succ.setdefault(x, []).append(y)
        nodes.add(x)
        nodes.add(y)
    WHITE, GRAY, BLACK = 0, 1, 2
    color = dict.fromkeys(nodes, WHITE)
    for start in nodes:
        if color[start] != WHITE:
            continue
        stack: list[tuple[int, Iterator[int]]] = [(start, iter(succ.get(start, ())))]
        color[start] = GRAY
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = BLACK
                stack.pop()
            elif color[nxt] == GRAY:
                return False
            elif color[nxt] == WHITE:
                color[nxt] = GRAY
                stack.append((nxt, iter(succ.get(nxt, ()))))
    return True


def is_itf(fr: Frame) -> bool:
    """Nonempty, well-typed, finite, irreflexive, transitive."""
    return (
        bool(fr.worlds)
        and relation_well_typed(fr)
        and irreflexive(fr)
        and transitive(fr)
    )


def frame_report(fr: Frame) -> FrameReport:
    """All frame predicates at once; explicit frames are always finite."""
    return FrameReport(
        nonempty=bool(fr.worlds),
        relation_well_typed=relation_well_typed(fr),
        finite=True,
        irreflexive=irreflexive(fr),
        transitive=transitive(fr),
        acyclic=acyclic(fr),
        validates_lob=valid_on_frame(fr, LOB_INSTANCE),
    )


def enumerate_frames(n: int) -> Iterator[Frame]:
    """All frames on worlds {0..k-1} for k = 1..n, every relation included.

    Deterministic order: k ascending, then the relation read as a bit
    mask over pairs (i, j) indexed by i*k + j.
    """
    if not 1 <= n <= 4:
        raise SizeGuardError(f"frame enumeration supports 1 <= n <= 4, got {n}")
    for k in range(1, n + 1):
        worlds = frozenset(range(k))
        pairs = [(i, j) for i in range(k) for j in range(k)]
        for mask in range(1 << (k * k)):
            rel = frozenset(p for b, p in enumerate(pairs) if mask >> b & 1)
            yield Frame(worlds, rel)


@lru_cache(maxsize=None)
def _itf_frames(n: int) -> tuple[Frame, ...]:
    return tuple(fr for fr in enumerate_frames(n) if is_itf(fr))


def itf_valid_small(f: Formula, n: int) -> bool:
    """Validity over every ITF frame with at most n worlds (n <= 3).

    A necessary condition for theoremhood by soundness; exhaustive, so
    usable as an independent oracle.
    """
    if not 1 <= n <= 3:
        raise SizeGuardError(f"ITF validity oracle supports 1 <= n <= 3, got {n}")
    return all(valid_on_frame(fr, f) for fr in _itf_frames(n))


# ---------------------------------------------------------------------------
# Serialization and inspection


def model_to_json(m: Model, names: Mapping[int, str] | None = None) -> dict:
    ws = sorted(m.frame.worlds)
    name = {w: (names[w] if names else f"w{w}") for w in ws}
    return {
        "worlds": [name[w] for w in ws],
        "rel": sorted([name[x], name[y]] for x, y in m.frame.rel),
        "val": {
            a: [name[w] for w in sorted(s)]
            for a, s in sorted(m.val.items())
            if s
        },
    }


def model_from_json(doc: Mapping) -> tuple[Model, tuple[str, ...]]:
    """Load a model, mapping world names to ids 0..n-1 in listing order.

    Returns the model and the name table (index = world id).
    """
    names = list(doc["worlds"])
    if len(set(names)) != len(names):
        raise ValueError("duplicate world names")
    index = {nm: i for i, nm in enumerate(names)}

    def wid(nm) -> int:
        if nm not in index:
            raise ValueError(f"undeclared world name: {nm!r}")
        return index[nm]

    rel = frozenset((wid(x), wid(y)) for x, y in doc.get("rel", []))
    val = {
        a: frozenset(wid(nm) for nm in ws) for a, ws in doc.get("val", {}).items()
    }
    return Model(Frame(frozenset(range(len(names))), rel), val), tuple(names)


def frame_to_dot(fr: Frame, names: Mapping[int, str] | None = None) -> str:
    name = {w: (names[w] if names else f"w{w}") for w in fr.worlds}
    lines = ["digraph frame {"]
    for w in sorted(fr.worlds):
        lines.append(f'  "{name[w]}";')
    for x, y in sorted(fr.rel):
        lines.append(f'  "{name[x]}" -> "{name[y]}";')
    lines.append("}")
    return "\n".join(lines)


def model_to_dot(m: Model, names: Mapping[int, str] | None = None) -> str:
    name = {w: (names[w] if names else f"w{w}") for w in m.frame.worlds}
    lines = ["digraph model {"]
    for w in sorted(m.frame.worlds):
        true_atoms = sorted(a for a, s in m.val.items() if w in s)
        label = name[w] + (": " + " ".join(true_atoms) if true_atoms else "")
        lines.append(f'  "{name[w]}" [label="{label}"];')
    for x, y in sorted(m.frame.rel):
        lines.append(f'  "{name[x]}" -> "{name[y]}";')
    lines.append("}")
    return "\n".join(lines)


def relabel(m: Model, mapping: Mapping[int, int]) -> Model:
    """Rename worlds through an injective id map."""
    if len(set(mapping.values())) != len(m.frame.worlds) or set(mapping) != set(
        m.frame.worlds
    ):
        raise ValueError("relabeling must be injective and total on the worlds")
    fr = Frame(
        frozenset(mapping[w] for w in m.frame.worlds),
        frozenset((mapping[x], mapping[y]) for x, y in m.frame.rel),
    )
    return Model(fr, {a: frozenset(mapping[w] for w in s) for a, s in m.val.items()})
