"""The GL axiomatic calculus as data.

Proofs are flat indexed step sequences (axiom instance, modus ponens,
necessitation); `check_proof` is the sole trusted component and
recomputes every step formula from scratch. Everything else, including
the whole lemma catalogue, only *builds* proof objects that the checker
must accept, so a bug outside the checker cannot certify a non-theorem.

Axiom schemas: a Wajsberg/Church-style classical core over implication
and falsity with definitional schemas for the other connectives, plus
the modal distribution schema K and the Lob schema GL.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .limits import SizeGuardError
from .syntax import (
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
    parse,
    print_formula,
)

# ---------------------------------------------------------------------------
# Axiom schemas

_P, _Q, _R = Atom("p"), Atom("q"), Atom("r")

#: Schema patterns; the atoms p, q, r act as metavariables ranging over
#: arbitrary formulas.
SCHEMAS: tuple[tuple[str, Formula], ...] = (
    ("addimp", Imp(_P, Imp(_Q, _P))),
    ("distribimp", Imp(Imp(_P, Imp(_Q, _R)), Imp(Imp(_P, _Q), Imp(_P, _R)))),
    ("doubleneg", Imp(Imp(Imp(_P, FALSE), FALSE), _P)),
    ("iffimp1", Imp(Iff(_P, _Q), Imp(_P, _Q))),
    ("iffimp2", Imp(Iff(_P, _Q), Imp(_Q, _P))),
    ("impiff", Imp(Imp(_P, _Q), Imp(Imp(_Q, _P), Iff(_P, _Q)))),
    ("true_def", Iff(TRUE, Imp(FALSE, FALSE))),
    ("not_def", Iff(Not(_P), Imp(_P, FALSE))),
    ("and_def", Iff(And(_P, _Q), Imp(Imp(_P, Imp(_Q, FALSE)), FALSE))),
    ("or_def", Iff(Or(_P, _Q), Not(And(Not(_P), Not(_Q))))),
    ("K", Imp(Box(Imp(_P, _Q)), Imp(Box(_P), Box(_Q)))),
    ("GL", Imp(Box(Imp(Box(_P), _P)), Box(_P))),
)


class AxiomMatch(NamedTuple):
    schema: str
    subst: dict[str, Formula]


def _match(pattern: Formula, f: Formula, subst: dict[str, Formula]) -> bool:
    if isinstance(pattern, Atom):
        bound = subst.get(pattern.name)
        if bound is None:
            subst[pattern.name] = f
            return True
        return bound == f
    if type(pattern) is not type(f):
        return False
    if isinstance(pattern, (Not, Box)):
        return _match(pattern.arg, f.arg, subst)
    if isinstance(pattern, (And, Or, Imp, Iff)):
        return _match(pattern.left, f.left, subst) and _match(
            pattern.right, f.right, subst
        )
    return pattern == f  # Truth / Falsity


def match_axiom(f: Formula) -> AxiomMatch | None:
    """The first schema f instantiates, with the instantiation, or None."""
    for name, pattern in SCHEMAS:
        subst: dict[str, Formula] = {}
        if _match(pattern, f, subst):
            return AxiomMatch(name, subst)
    return None


def is_axiom(f: Formula) -> bool:
    return match_axiom(f) is not None


# ---------------------------------------------------------------------------
# Proof objects and the trusted checker


@dataclass(frozen=True)
class AxiomStep:
    formula: Formula


@dataclass(frozen=True)
class MpStep:
    major: int
    minor: int


@dataclass(frozen=True)
class NecStep:
    premise: int


Step = AxiomStep | MpStep | NecStep


@dataclass(frozen=True)
class Proof:
    steps: tuple[Step, ...]


class ProofError(ValueError):
    """Rejection of a proof, located at a step index."""

    def __init__(self, step: int, reason: str):
        super().__init__(f"step {step}: {reason}")
        self.step = step
        self.reason = reason


def step_formulas(pr: Proof) -> list[Formula]:
    """Derived formula of every step; raises ProofError on the first bad step."""
    if not pr.steps:
        raise ProofError(0, "empty proof")
    forms: list[Formula] = []
    for i, step in enumerate(pr.steps):
        if isinstance(step, AxiomStep):
            if not is_axiom(step.formula):
                raise ProofError(
                    i, f"not an axiom instance: {print_formula(step.formula)}"
                )
            forms.append(step.formula)
        elif isinstance(step, MpStep):
            if not (0 <= step.major < i and 0 <= step.minor < i):
                raise ProofError(i, f"index out of range: mp {step.major} {step.minor}")
            major = forms[step.major]
            if not isinstance(major, Imp):
                raise ProofError(
                    i, f"major premise is not an implication: {print_formula(major)}"
                )
            if major.left != forms[step.minor]:
                raise ProofError(
                    i,
                    "minor premise does not match the antecedent: "
                    f"expected {print_formula(major.left)}, "
                    f"got {print_formula(forms[step.minor])}",
                )
            forms.append(major.right)
        elif isinstance(step, NecStep):
            if not 0 <= step.premise < i:
                raise ProofError(i, f"index out of range: nec {step.premise}")
            forms.append(Box(forms[step.premise]))
        else:
            raise ProofError(i, f"unknown step kind: {step!r}")
    return forms


def check_proof(pr: Proof) -> Formula:
    """Validate every step and return the conclusion (the last formula)."""
    return step_formulas(pr)[-1]


def proof_to_json(pr: Proof) -> dict:
    steps: list[dict] = []
    for step in pr.steps:
        if isinstance(step, AxiomStep):
            steps.append({"axiom": print_formula(step.formula)})
        elif isinstance(step, MpStep):
            steps.append({"mp": [step.major, step.minor]})
        else:
            steps.append({"nec": step.premise})
    return {"steps": steps}


def proof_from_json(doc) -> Proof:
    steps: list[Step] = []
    for raw in doc["steps"]:
        if "axiom" in raw:
            steps.append(AxiomStep(parse(raw["axiom"])))
        elif "mp" in raw:
            i, j = raw["mp"]
            steps.append(MpStep(int(i), int(j)))
        elif "nec" in raw:
            steps.append(NecStep(int(raw["nec"])))
        else:
            raise ValueError(f"unknown step record: {raw!r}")
    return Proof(tuple(steps))


# ---------------------------------------------------------------------------
# Proof construction

# Axiom instance builders.


def addimp(p: Formula, q: Formula) -> Formula:
    return Imp(p, Imp(q, p))


def distribimp(p: Formula, q: Formula, r: Formula) -> Formula:
    return Imp(Imp(p, Imp(q, r)), Imp(Imp(p, q), Imp(p, r)))


def doubleneg(p: Formula) -> Formula:
    return Imp(Imp(Imp(p, FALSE), FALSE), p)


def iffimp1(p: Formula, q: Formula) -> Formula:
    return Imp(Iff(p, q), Imp(p, q))


def iffimp2(p: Formula, q: Formula) -> Formula:
    return Imp(Iff(p, q), Imp(q, p))


def impiff(p: Formula, q: Formula) -> Formula:
    return Imp(Imp(p, q), Imp(Imp(q, p), Iff(p, q)))


def true_def() -> Formula:
    return Iff(TRUE, Imp(FALSE, FALSE))


def not_def(p: Formula) -> Formula:
    return Iff(Not(p), Imp(p, FALSE))


def and_def(p: Formula, q: Formula) -> Formula:
    return Iff(And(p, q), Imp(Imp(p, Imp(q, FALSE)), FALSE))


def or_def(p: Formula, q: Formula) -> Formula:
    return Iff(Or(p, q), Not(And(Not(p), Not(q))))


def k_axiom(p: Formula, q: Formula) -> Formula:
    return Imp(Box(Imp(p, q)), Imp(Box(p), Box(q)))


def gl_axiom(p: Formula) -> Formula:
    return Imp(Box(Imp(Box(p), p)), Box(p))


class ProofBuilder:
    """Accumulates steps, reusing any step whose formula was already derived."""

    def __init__(self) -> None:
        self.steps: list[Step] = []
        self.forms: list[Formula] = []
        self._index: dict[Formula, int] = {}

    def form(self, i: int) -> Formula:
        return self.forms[i]

    def _push(self, step: Step, formula: Formula) -> int:
        known = self._index.get(formula)
        if known is not None:
            return known
        self.steps.append(step)
        self.forms.append(formula)
        self._index[formula] = len(self.steps) - 1
        return len(self.steps) - 1

    def axiom(self, f: Formula) -> int:
        if not is_axiom(f):
            raise ValueError(f"not an axiom instance: {print_formula(f)}")
        return self._push(AxiomStep(f), f)

    def mp(self, major: int, minor: int) -> int:
        imp = self.forms[major]
        if not isinstance(imp, Imp) or imp.left != self.forms[minor]:
            raise ValueError("modus ponens premise mismatch while building")
        return self._push(MpStep(major, minor), imp.right)

    def nec(self, premise: int) -> int:
        return self._push(NecStep(premise), Box(self.forms[premise]))

    def build(self, conclusion: int) -> Proof:
        # The conclusion must be the final step; re-derive it there if
        # step sharing left it in the middle.
        if conclusion != len(self.steps) - 1:
            step = self.steps[conclusion]
            self.steps.append(step)
            self.forms.append(self.forms[conclusion])
        return Proof(tuple(self.steps))


def _dest_imp(f: Formula) -> tuple[Formula, Formula]:
    assert isinstance(f, Imp), print_formula(f)
    return f.left, f.right


# Derived inference rules. Each takes the builder plus indices of already
# proven lines and returns the index of the new line.


def _imp_refl(b: ProofBuilder, p: Formula) -> int:
    s1 = b.axiom(distribimp(p, Imp(p, p), p))
    s2 = b.axiom(addimp(p, Imp(p, p)))
    s3 = b.mp(s1, s2)
    s4 = b.axiom(addimp(p, p))
    return b.mp(s3, s4)


def _add_assum(b: ProofBuilder, p: Formula, i: int) -> int:
    # |- q  ==>  |- p --> q
    q = b.form(i)
    return b.mp(b.axiom(addimp(q, p)), i)


def _imp_add_assum(b: ProofBuilder, p: Formula, i: int) -> int:
    # |- q --> r  ==>  |- (p --> q) --> (p --> r)
    q, r = _dest_imp(b.form(i))
    return b.mp(b.axiom(distribimp(p, q, r)), _add_assum(b, p, i))


def _imp_trans(b: ProofBuilder, i: int, j: int) -> int:
    # |- p --> q, |- q --> r  ==>  |- p --> r
    p, _ = _dest_imp(b.form(i))
    return b.mp(_imp_add_assum(b, p, j), i)


def _imp_swap(b: ProofBuilder, i: int) -> int:
    # |- p --> (q --> r)  ==>  |- q --> (p --> r)
    p, qr = _dest_imp(b.form(i))
    q, r = _dest_imp(qr)
    distributed = b.mp(b.axiom(distribimp(p, q, r)), i)
    return _imp_trans(b, b.axiom(addimp(q, p)), distributed)


def _mp_under(b: ProofBuilder, i: int, j: int) -> int:
    # |- a --> (p --> q), |- a --> p  ==>  |- a --> q
    a, pq = _dest_imp(b.form(i))
    p, q = _dest_imp(pq)
    return b.mp(b.mp(b.axiom(distribimp(a, p, q)), i), j)


def _imp_trans2(b: ProofBuilder, i: int, j: int) -> int:
    # |- a --> (c --> d), |- b --> c  ==>  |- a --> (b --> d)
    swapped = _imp_swap(b, i)
    chained = _imp_trans(b, j, swapped)
    return _imp_swap(b, chained)


def _imp_trans_right(b: ProofBuilder, i: int, j: int) -> int:
    # |- a --> (c --> d), |- d --> e  ==>  |- a --> (c --> e)
    _, cd = _dest_imp(b.form(i))
    c, _ = _dest_imp(cd)
    return _imp_trans(b, i, _imp_add_assum(b, c, j))


def _box_mono(b: ProofBuilder, i: int) -> int:
    # |- p --> q  ==>  |- Box p --> Box q
    p, q = _dest_imp(b.form(i))
    return b.mp(b.axiom(k_axiom(p, q)), b.nec(i))


def _iff_intro(b: ProofBuilder, i: int, j: int) -> int:
    # |- p --> q, |- q --> p  ==>  |- p <-> q
    p, q = _dest_imp(b.form(i))
    return b.mp(b.mp(b.axiom(impiff(p, q)), i), j)


def _iff_elim1(b: ProofBuilder, i: int) -> int:
    f = b.form(i)
    assert isinstance(f, Iff)
    return b.mp(b.axiom(iffimp1(f.left, f.right)), i)


def _iff_elim2(b: ProofBuilder, i: int) -> int:
    f = b.form(i)
    assert isinstance(f, Iff)
    return b.mp(b.axiom(iffimp2(f.left, f.right)), i)


def _iff_trans_rule(b: ProofBuilder, i: int, j: int) -> int:
    # |- a <-> b, |- b <-> c  ==>  |- a <-> c
    fwd = _imp_trans(b, _iff_elim1(b, i), _iff_elim1(b, j))
    bwd = _imp_trans(b, _iff_elim2(b, j), _iff_elim2(b, i))
    return _iff_intro(b, fwd, bwd)


def _contrapos_rule(b: ProofBuilder, i: int) -> int:
    # |- x --> y  ==>  |- Not y --> Not x
    x, y = _dest_imp(b.form(i))
    return b.mp(_b_contrapos(b, x, y), i)


# Lemma bodies. Each returns the index of the lemma's statement.


def _b_true(b: ProofBuilder) -> int:
    ff = Imp(FALSE, FALSE)
    to_true = b.mp(b.axiom(iffimp2(TRUE, ff)), b.axiom(true_def()))
    return b.mp(to_true, _imp_refl(b, FALSE))


def _b_not_elim(b: ProofBuilder, p: Formula) -> int:
    return b.mp(b.axiom(iffimp1(Not(p), Imp(p, FALSE))), b.axiom(not_def(p)))


def _b_not_intro(b: ProofBuilder, p: Formula) -> int:
    return b.mp(b.axiom(iffimp2(Not(p), Imp(p, FALSE))), b.axiom(not_def(p)))


def _b_not_false(b: ProofBuilder) -> int:
    return b.mp(_b_not_intro(b, FALSE), _imp_refl(b, FALSE))


def _b_ex_falso(b: ProofBuilder, p: Formula) -> int:
    start = b.axiom(addimp(FALSE, Imp(p, FALSE)))
    return _imp_trans(b, start, b.axiom(doubleneg(p)))


def _b_imp_trans_th(b: ProofBuilder, p: Formula, q: Formula, r: Formula) -> int:
    lifted = _imp_trans(
        b, b.axiom(addimp(Imp(q, r), p)), b.axiom(distribimp(p, q, r))
    )
    return _imp_swap(b, lifted)


def _b_imp_swap_th(b: ProofBuilder, p: Formula, q: Formula, r: Formula) -> int:
    th1 = b.axiom(distribimp(p, q, r))
    precomp = b.mp(
        _b_imp_trans_th(b, q, Imp(p, q), Imp(p, r)), b.axiom(addimp(q, p))
    )
    return _imp_trans(b, th1, precomp)


def _b_dneg_elim(b: ProofBuilder, p: Formula) -> int:
    unfold = _b_not_elim(b, Not(p))
    refold = b.mp(
        _b_imp_trans_th(b, Imp(p, FALSE), Not(p), FALSE), _b_not_intro(b, p)
    )
    return _imp_trans(b, _imp_trans(b, unfold, refold), b.axiom(doubleneg(p)))


def _b_dneg_intro(b: ProofBuilder, p: Formula) -> int:
    swapped = _imp_swap(b, _b_not_elim(b, p))
    return _imp_trans(b, swapped, _b_not_intro(b, Not(p)))


def _b_contrapos(b: ProofBuilder, p: Formula, q: Formula) -> int:
    base = _b_imp_trans_th(b, p, q, FALSE)
    unfold = b.mp(
        _b_imp_trans_th(b, Not(q), Imp(q, FALSE), Imp(p, FALSE)),
        _b_not_elim(b, q),
    )
    refold = _imp_add_assum(b, Not(q), _b_not_intro(b, p))
    return _imp_trans(b, base, _imp_trans(b, unfold, refold))


def _b_and_elim_l(b: ProofBuilder, p: Formula, q: Formula) -> int:
    unfolded = Imp(Imp(p, Imp(q, FALSE)), FALSE)
    e1 = b.mp(b.axiom(iffimp1(And(p, q), unfolded)), b.axiom(and_def(p, q)))
    lift = _imp_add_assum(b, p, b.axiom(addimp(FALSE, q)))
    f2 = b.mp(
        _b_imp_trans_th(b, Imp(p, FALSE), Imp(p, Imp(q, FALSE)), FALSE), lift
    )
    return _imp_trans(b, e1, _imp_trans(b, f2, b.axiom(doubleneg(p))))


def _b_and_elim_r(b: ProofBuilder, p: Formula, q: Formula) -> int:
    unfolded = Imp(Imp(p, Imp(q, FALSE)), FALSE)
    e1 = b.mp(b.axiom(iffimp1(And(p, q), unfolded)), b.axiom(and_def(p, q)))
    lift = b.axiom(addimp(Imp(q, FALSE), p))
    f2 = b.mp(
        _b_imp_trans_th(b, Imp(q, FALSE), Imp(p, Imp(q, FALSE)), FALSE), lift
    )
    return _imp_trans(b, e1, _imp_trans(b, f2, b.axiom(doubleneg(q))))


def _b_and_intro(b: ProofBuilder, p: Formula, q: Formula) -> int:
    x = Imp(p, Imp(q, FALSE))
    to_x = _imp_swap(b, _imp_refl(b, x))
    curried = _imp_trans(b, to_x, _b_imp_swap_th(b, x, q, FALSE))
    fold = b.mp(
        b.axiom(iffimp2(And(p, q), Imp(x, FALSE))), b.axiom(and_def(p, q))
    )
    return _imp_trans_right(b, curried, fold)


def _b_imp_and_intro(b: ProofBuilder, r: Formula, p: Formula, q: Formula) -> int:
    lifted = _imp_add_assum(b, r, _b_and_intro(b, p, q))
    return _imp_trans(b, lifted, b.axiom(distribimp(r, q, And(p, q))))


def _b_imp_and_elim_l(b: ProofBuilder, r: Formula, p: Formula, q: Formula) -> int:
    return _imp_add_assum(b, r, _b_and_elim_l(b, p, q))


def _b_imp_and_elim_r(b: ProofBuilder, r: Formula, p: Formula, q: Formula) -> int:
    return _imp_add_assum(b, r, _b_and_elim_r(b, p, q))


def _b_modusponens(b: ProofBuilder, p: Formula, q: Formula) -> int:
    left = _b_and_elim_l(b, Imp(p, q), p)
    right = _b_and_elim_r(b, Imp(p, q), p)
    return _mp_under(b, left, right)


def _b_imp_refl(b: ProofBuilder, p: Formula) -> int:
    return _imp_refl(b, p)


def _b_or_intro_l(b: ProofBuilder, p: Formula, q: Formula) -> int:
    n = Not(And(Not(p), Not(q)))
    fold = b.mp(b.axiom(iffimp2(Or(p, q), n)), b.axiom(or_def(p, q)))
    neg = _contrapos_rule(b, _b_and_elim_l(b, Not(p), Not(q)))
    return _imp_trans(b, _imp_trans(b, _b_dneg_intro(b, p), neg), fold)


def _b_or_intro_r(b: ProofBuilder, p: Formula, q: Formula) -> int:
    n = Not(And(Not(p), Not(q)))
    fold = b.mp(b.axiom(iffimp2(Or(p, q), n)), b.axiom(or_def(p, q)))
    neg = _contrapos_rule(b, _b_and_elim_r(b, Not(p), Not(q)))
    return _imp_trans(b, _imp_trans(b, _b_dneg_intro(b, q), neg), fold)


def _b_or_elim(b: ProofBuilder, p: Formula, q: Formula, r: Formula) -> int:
    n = Not(And(Not(p), Not(q)))
    c1 = _b_contrapos(b, p, r)
    c2 = _b_contrapos(b, q, r)
    both = _b_imp_and_intro(b, Not(r), Not(p), Not(q))
    u1 = _imp_trans(b, c1, both)
    u2 = _imp_trans2(b, u1, c2)
    flip = _b_contrapos(b, Not(r), And(Not(p), Not(q)))
    u3 = _imp_trans_right(b, u2, flip)
    dn = _imp_add_assum(b, n, _b_dneg_elim(b, r))
    u4 = _imp_trans_right(b, u3, dn)
    unfold = b.mp(b.axiom(iffimp1(Or(p, q), n)), b.axiom(or_def(p, q)))
    precomp = b.mp(_b_imp_trans_th(b, Or(p, q), n, r), unfold)
    return _imp_trans_right(b, u4, precomp)


def _b_iff_refl(b: ProofBuilder, p: Formula) -> int:
    i = _imp_refl(b, p)
    return _iff_intro(b, i, i)


def _b_iff_sym(b: ProofBuilder, p: Formula, q: Formula) -> int:
    i1 = b.axiom(iffimp1(p, q))
    i2 = b.axiom(iffimp2(p, q))
    partial = _imp_trans(b, i2, b.axiom(impiff(q, p)))
    return _mp_under(b, partial, i1)


def _b_box_true_iff(b: ProofBuilder) -> int:
    t = _b_true(b)
    bt = b.nec(t)
    return _iff_intro(b, _add_assum(b, Box(TRUE), t), _add_assum(b, TRUE, bt))


def _b_box_and_split(b: ProofBuilder, p: Formula, q: Formula) -> int:
    m1 = _box_mono(b, _b_and_elim_l(b, p, q))
    m2 = _box_mono(b, _b_and_elim_r(b, p, q))
    pair = _b_imp_and_intro(b, Box(And(p, q)), Box(p), Box(q))
    return b.mp(b.mp(pair, m1), m2)


def _b_box_and_join(b: ProofBuilder, p: Formula, q: Formula) -> int:
    n1 = b.nec(_b_and_intro(b, p, q))
    k1 = b.mp(b.axiom(k_axiom(p, Imp(q, And(p, q)))), n1)
    curried = _imp_trans(b, k1, b.axiom(k_axiom(q, And(p, q))))
    x = And(Box(p), Box(q))
    left = _b_and_elim_l(b, Box(p), Box(q))
    right = _b_and_elim_r(b, Box(p), Box(q))
    return _mp_under(b, _imp_trans(b, left, curried), right)


def _b_box_conj_iff(b: ProofBuilder, p: Formula, q: Formula) -> int:
    return _iff_intro(b, _b_box_and_split(b, p, q), _b_box_and_join(b, p, q))


def _b_box_iff(b: ProofBuilder, p: Formula, q: Formula) -> int:
    m1 = _box_mono(b, b.axiom(iffimp1(p, q)))
    m2 = _box_mono(b, b.axiom(iffimp2(p, q)))
    c1 = _imp_trans(b, m1, b.axiom(k_axiom(p, q)))
    c2 = _imp_trans(b, m2, b.axiom(k_axiom(q, p)))
    partial = _imp_trans(b, c1, b.axiom(impiff(Box(p), Box(q))))
    return _mp_under(b, partial, c2)


def _b_and_congr_r(b: ProofBuilder, c: Formula, i: int) -> int:
    # |- a <-> a'  ==>  |- (c && a) <-> (c && a')
    f = b.form(i)
    assert isinstance(f, Iff)
    a, a2 = f.left, f.right

    def direction(src: Formula, dst: Formula, elim: int) -> int:
        keep = _b_and_elim_l(b, c, src)
        move = _imp_trans(b, _b_and_elim_r(b, c, src), elim)
        pair = _b_imp_and_intro(b, And(c, src), c, dst)
        return b.mp(b.mp(pair, keep), move)

    fwd = direction(a, a2, _iff_elim1(b, i))
    bwd = direction(a2, a, _iff_elim2(b, i))
    return _iff_intro(b, fwd, bwd)


def conjlist(fs: Sequence[Formula]) -> Formula:
    """Right-nested conjunction: True for [], the element itself for [f]."""
    fs = list(fs)
    if not fs:
        return TRUE
    if len(fs) == 1:
        return fs[0]
    return And(fs[0], conjlist(fs[1:]))


def _b_conjlist_map_box(b: ProofBuilder, fs: Sequence[Formula]) -> int:
    fs = list(fs)
    if len(fs) > 8:
        raise SizeGuardError(f"conjlist box distribution supports length <= 8, got {len(fs)}")
    if not fs:
        return _b_box_true_iff(b)
    if len(fs) == 1:
        return _b_iff_refl(b, Box(fs[0]))
    head, rest = fs[0], fs[1:]
    ih = _b_conjlist_map_box(b, rest)
    split = _b_box_conj_iff(b, head, conjlist(rest))
    congr = _b_and_congr_r(b, Box(head), ih)
    return _iff_trans_rule(b, split, congr)


def conjlist_map_box_proof(fs: Sequence[Formula]) -> Proof:
    """Checked proof that Box distributes over a conjlist:
    Box (conjlist fs) <-> conjlist (map Box fs)."""
    b = ProofBuilder()
    return b.build(_b_conjlist_map_box(b, fs))


# ---------------------------------------------------------------------------
# Lemma catalogue


@dataclass(frozen=True)
class LemmaInfo:
    name: str
    arity: int | None  # None: takes a formula list (length <= 8)
    doc: str
    statement: Callable[..., Formula]
    build: Callable[..., int]


def _info(name, arity, doc, statement, build) -> tuple[str, LemmaInfo]:
    return name, LemmaInfo(name, arity, doc, statement, build)


LEMMAS: dict[str, LemmaInfo] = dict(
    [
        _info("true_th", 0, "True", lambda: TRUE, _b_true),
        _info("not_false_th", 0, "Not False", lambda: Not(FALSE), _b_not_false),
        _info("imp_refl", 1, "p --> p", lambda p: Imp(p, p), _b_imp_refl),
        _info(
            "imp_trans_th",
            3,
            "(p --> q) --> (q --> r) --> (p --> r)",
            lambda p, q, r: Imp(Imp(p, q), Imp(Imp(q, r), Imp(p, r))),
            _b_imp_trans_th,
        ),
        _info(
            "imp_swap_th",
            3,
            "(p --> q --> r) --> (q --> p --> r)",
            lambda p, q, r: Imp(Imp(p, Imp(q, r)), Imp(q, Imp(p, r))),
            _b_imp_swap_th,
        ),
        _info(
            "modusponens_th",
            2,
            "(p --> q) && p --> q",
            lambda p, q: Imp(And(Imp(p, q), p), q),
            _b_modusponens,
        ),
        _info(
            "ex_falso_th",
            1,
            "False --> p",
            lambda p: Imp(FALSE, p),
            _b_ex_falso,
        ),
        _info(
            "dneg_elim_th",
            1,
            "Not Not p --> p",
            lambda p: Imp(Not(Not(p)), p),
            _b_dneg_elim,
        ),
        _info(
            "dneg_intro_th",
            1,
            "p --> Not Not p",
            lambda p: Imp(p, Not(Not(p))),
            _b_dneg_intro,
        ),
        _info(
            "not_intro_th",
            1,
            "(p --> False) --> Not p",
            lambda p: Imp(Imp(p, FALSE), Not(p)),
            _b_not_intro,
        ),
        _info(
            "not_elim_th",
            1,
            "Not p --> (p --> False)",
            lambda p: Imp(Not(p), Imp(p, FALSE)),
            _b_not_elim,
        ),
        _info(
            "contrapos_th",
            2,
            "(p --> q) --> (Not q --> Not p)",
            lambda p, q: Imp(Imp(p, q), Imp(Not(q), Not(p))),
            _b_contrapos,
        ),
        _info(
            "and_intro_th",
            2,
            "p --> q --> p && q",
            lambda p, q: Imp(p, Imp(q, And(p, q))),
            _b_and_intro,
        ),
        _info(
            "and_elim_l_th",
            2,
            "p && q --> p",
            lambda p, q: Imp(And(p, q), p),
            _b_and_elim_l,
        ),
        _info(
            "and_elim_r_th",
            2,
            "p && q --> q",
            lambda p, q: Imp(And(p, q), q),
            _b_and_elim_r,
        ),
        _info(
            "imp_and_intro_th",
            3,
            "(r --> p) --> (r --> q) --> (r --> p && q)",
            lambda r, p, q: Imp(Imp(r, p), Imp(Imp(r, q), Imp(r, And(p, q)))),
            _b_imp_and_intro,
        ),
        _info(
            "imp_and_elim_l_th",
            3,
            "(r --> p && q) --> (r --> p)",
            lambda r, p, q: Imp(Imp(r, And(p, q)), Imp(r, p)),
            _b_imp_and_elim_l,
        ),
        _info(
            "imp_and_elim_r_th",
            3,
            "(r --> p && q) --> (r --> q)",
            lambda r, p, q: Imp(Imp(r, And(p, q)), Imp(r, q)),
            _b_imp_and_elim_r,
        ),
        _info(
            "or_intro_l_th",
            2,
            "p --> p || q",
            lambda p, q: Imp(p, Or(p, q)),
            _b_or_intro_l,
        ),
        _info(
            "or_intro_r_th",
            2,
            "q --> p || q",
            lambda p, q: Imp(q, Or(p, q)),
            _b_or_intro_r,
        ),
        _info(
            "or_elim_th",
            3,
            "(p --> r) --> (q --> r) --> (p || q --> r)",
            lambda p, q, r: Imp(
                Imp(p, r), Imp(Imp(q, r), Imp(Or(p, q), r))
            ),
            _b_or_elim,
        ),
        _info(
            "iff_refl",
            1,
            "p <-> p",
            lambda p: Iff(p, p),
            _b_iff_refl,
        ),
        _info(
            "iff_sym_th",
            2,
            "(p <-> q) --> (q <-> p)",
            lambda p, q: Imp(Iff(p, q), Iff(q, p)),
            _b_iff_sym,
        ),
        _info(
            "box_imp_distr",
            2,
            "Box (p --> q) --> Box p --> Box q",
            k_axiom,
            lambda b, p, q: b.axiom(k_axiom(p, q)),
        ),
        _info(
            "lob",
            1,
            "Box (Box p --> p) --> Box p",
            gl_axiom,
            lambda b, p: b.axiom(gl_axiom(p)),
        ),
        _info(
            "box_true_iff",
            0,
            "Box True <-> True",
            lambda: Iff(Box(TRUE), TRUE),
            _b_box_true_iff,
        ),
        _info(
            "box_and_split_th",
            2,
            "Box (p && q) --> Box p && Box q",
            lambda p, q: Imp(Box(And(p, q)), And(Box(p), Box(q))),
            _b_box_and_split,
        ),
        _info(
            "box_and_join_th",
            2,
            "Box p && Box q --> Box (p && q)",
            lambda p, q: Imp(And(Box(p), Box(q)), Box(And(p, q))),
            _b_box_and_join,
        ),
        _info(
            "box_conj_iff",
            2,
            "Box (p && q) <-> Box p && Box q",
            lambda p, q: Iff(Box(And(p, q)), And(Box(p), Box(q))),
            _b_box_conj_iff,
        ),
        _info(
            "box_iff",
            2,
            "Box (p <-> q) --> (Box p <-> Box q)",
            lambda p, q: Imp(Box(Iff(p, q)), Iff(Box(p), Box(q))),
            _b_box_iff,
        ),
        _info(
            "conjlist_map_box",
            None,
            "Box (conjlist fs) <-> conjlist (map Box fs)",
            lambda *fs: Iff(
                Box(conjlist(fs)), conjlist([Box(f) for f in fs])
            ),
            _b_conjlist_map_box,
        ),
    ]
)


def lemma(name: str, args: Sequence[Formula] = ()) -> Proof:
    """Kernel-checkable proof of a catalogued lemma at the given formulas."""
    info = LEMMAS.get(name)
    if info is None:
        raise LookupError(f"unknown lemma: {name!r}")
    args = list(args)
    if info.arity is not None and len(args) != info.arity:
        raise ValueError(
            f"lemma {name} takes {info.arity} formula argument(s), got {len(args)}"
        )
    b = ProofBuilder()
    if info.arity is None:
        idx = info.build(b, args)
    else:
        idx = info.build(b, *args)
    return b.build(idx)


def lemma_statement(name: str, args: Sequence[Formula] = ()) -> Formula:
    """The formula the catalogued lemma proves at the given arguments."""
    info = LEMMAS.get(name)
    if info is None:
        raise LookupError(f"unknown lemma: {name!r}")
    args = list(args)
    if info.arity is not None and len(args) != info.arity:
        raise ValueError(
            f"lemma {name} takes {info.arity} formula argument(s), got {len(args)}"
        )
    return info.statement(*args)
