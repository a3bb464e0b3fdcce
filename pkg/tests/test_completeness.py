import json

import pytest

from glkit.completeness import (
    Countermodel,
    Theorem,
    World,
    certificate_from_json,
    certificate_to_json,
    closure_context,
    consistent,
    decide,
    extend_maximal_consistent,
    hintikka_worlds,
    saturate,
    standard_rel,
    verify_certificate,
)
from glkit.kripke import holds, is_itf
from glkit.limits import SizeGuardError
from glkit.syntax import (
    FALSE,
    And,
    Atom,
    Box,
    Imp,
    Not,
    canonical_key,
    parse,
    print_formula,
)

p, q = Atom("p"), Atom("q")


def world_of(ctx, *texts):
    """Look up the hintikka world with exactly these members."""
    want = frozenset(parse(t) for t in texts)
    for w in hintikka_worlds(ctx):
        if w.member_set == want:
            return w
    raise AssertionError(f"no world with members {texts}")


class TestHintikkaWorlds:
    def test_atom_two_worlds(self):
        ws = hintikka_worlds(closure_context(p))
        assert {w.member_set for w in ws} == {
            frozenset({p}),
            frozenset({Not(p)}),
        }

    def test_implication_four_worlds(self):
        ws = hintikka_worlds(closure_context(Imp(p, q)))
        assert len(ws) == 4

    def test_boxed_four_worlds(self):
        ws = hintikka_worlds(closure_context(parse("Box p --> p")))
        assert len(ws) == 4

    def test_world_count_law(self):
        for text in ["p", "p && q", "Box p --> p", "Box (p --> Box q)", "Not p"]:
            ctx = closure_context(parse(text))
            n_atoms = sum(1 for g in ctx.closure if isinstance(g, Atom))
            n_boxes = sum(1 for g in ctx.closure if isinstance(g, Box))
            assert len(hintikka_worlds(ctx)) == 2 ** (n_atoms + n_boxes)

    def test_members_canonically_ordered_and_complete(self):
        ctx = closure_context(parse("Box p --> (p && q)"))
        for w in hintikka_worlds(ctx):
            ks = [canonical_key(m) for m in w.members]
            assert ks == sorted(ks)
            for g in ctx.closure:
                assert (g in w) != (Not(g) in w)

    def test_boolean_coherence(self):
        ctx = closure_context(parse("(p && q) --> (Not p || q)"))
        for w in hintikka_worlds(ctx):
            assert (And(p, q) in w) == (p in w and q in w)
            assert (Not(p) in w) == (p not in w)
            assert (parse("Not p || q") in w) == (Not(p) in w or q in w)
            assert (ctx.target in w) == (
                And(p, q) not in w or parse("Not p || q") in w
            )

    def test_size_guard(self):
        wide = parse(" && ".join(f"a{i}" for i in range(17)))
        with pytest.raises(SizeGuardError):
            hintikka_worlds(closure_context(wide))


class TestStandardRel:
    def test_forward_pair_only(self):
        ctx = closure_context(parse("Box p --> p"))
        w = world_of(ctx, "p", "Not Box p", "Box p --> p")
        x = world_of(ctx, "p", "Box p", "Box p --> p")
        assert standard_rel(ctx, w, x) is True
        assert standard_rel(ctx, x, w) is False

    def test_irreflexive(self):
        ctx = closure_context(parse("Box p --> p"))
        for w in hintikka_worlds(ctx):
            assert standard_rel(ctx, w, w) is False

    @pytest.mark.parametrize(
        "text", ["Box p --> p", "Box p --> Box Box p", "Box (p && q)"]
    )
    def test_irreflexive_transitive_exhaustive(self, text):
        ctx = closure_context(parse(text))
        ws = hintikka_worlds(ctx)
        for w in ws:
            assert not standard_rel(ctx, w, w)
        for a in ws:
            for b in ws:
                if not standard_rel(ctx, a, b):
                    continue
                for c in ws:
                    if standard_rel(ctx, b, c):
                        assert standard_rel(ctx, a, c)


class TestSaturate:
    def test_no_obligations(self):
        ctx = closure_context(p)
        w = world_of(ctx, "p")
        assert saturate(ctx, w) is True

    def test_unsatisfiable_obligation(self):
        # The successor core {Box (p && p), Not (p && p), Box p, p} is
        # propositionally incoherent, so no witness world exists.
        ctx = closure_context(parse("Box p --> Box (p && p)"))
        refuting = [
            w
            for w in hintikka_worlds(ctx)
            if Box(p) in w and Not(Box(And(p, p))) in w
        ]
        assert len(refuting) == 2
        for w in refuting:
            assert saturate(ctx, w) is False

    def test_satisfiable_obligation(self):
        ctx = closure_context(parse("Box p --> p"))
        w = world_of(ctx, "p", "Not Box p", "Box p --> p")
        assert saturate(ctx, w) is True

    def test_memo_argument(self):
        ctx = closure_context(parse("Box p --> p"))
        memo = {}
        for w in hintikka_worlds(ctx):
            saturate(ctx, w, memo)
        assert len(memo) == 4 and all(memo.values())

    def test_foreign_world_rejected(self):
        ctx = closure_context(p)
        with pytest.raises(ValueError):
            saturate(ctx, World((q,)))


class TestDecide:
    def test_false_has_countermodel(self):
        v = decide(FALSE)
        assert isinstance(v, Countermodel)
        assert verify_certificate(v) is True

    def test_lob_is_theorem(self):
        assert isinstance(decide(parse("Box (Box p --> p) --> Box p")), Theorem)

    def test_reflection_countermodel(self):
        v = decide(parse("Box p --> p"))
        assert isinstance(v, Countermodel)
        assert Not(parse("Box p --> p")) in v.witness
        m = v.model.to_model()
        widx = v.model.worlds.index(v.witness)
        assert holds(m, parse("Box p --> p"), widx) is False
        assert holds(m, Box(p), widx) is True  # vacuously, witness is terminal

    def test_box_iff_is_theorem(self):
        assert isinstance(decide(parse("Box (p <-> q) --> (Box p <-> Box q)")), Theorem)

    def test_four_is_theorem(self):
        # Transitivity schema, derivable in GL.
        assert isinstance(decide(parse("Box p --> Box Box p")), Theorem)

    def test_deterministic(self):
        f = parse("Box p --> p")
        v1, v2 = decide(f), decide(f)
        assert v1 == v2
        assert certificate_to_json(v1) == certificate_to_json(v2)

    def test_size_guard(self):
        wide = parse(" && ".join(f"a{i}" for i in range(17)))
        with pytest.raises(SizeGuardError):
            decide(wide)

    def test_countermodel_frame_is_itf(self):
        v = decide(parse("Box p --> q"))
        assert isinstance(v, Countermodel)
        assert is_itf(v.model.to_model().frame)

    def test_rel_matches_standard_rel(self):
        v = decide(parse("Box p --> p"))
        ctx = v.model.context
        ws = v.model.worlds
        pairs = set(v.model.rel)
        for i, a in enumerate(ws):
            for j, b in enumerate(ws):
                assert ((i, j) in pairs) == standard_rel(ctx, a, b)

    def test_frame_condition(self):
        # Box q in w iff q belongs to every standard successor.
        for text in ["Box p --> p", "Not Box p", "Box p --> Box Box p"]:
            v = decide(parse(text))
            if not isinstance(v, Countermodel):
                continue
            ctx = v.model.context
            ws = v.model.worlds
            pairs = set(v.model.rel)
            for g in ctx.closure:
                if not isinstance(g, Box):
                    continue
                for i, w in enumerate(ws):
                    succ_all = all(
                        g.arg in ws[j] for (a, j) in pairs if a == i
                    )
                    assert (g in w) == succ_all


class TestVerifyCertificate:
    def test_good_certificate(self):
        v = decide(parse("Box p --> p"))
        assert verify_certificate(v) is True

    def test_reflexive_edge_rejected(self):
        v = decide(parse("Box p --> p"))
        sm = v.model
        tampered = Countermodel(
            type(sm)(sm.target, sm.worlds, sm.rel + ((0, 0),)), v.witness
        )
        assert verify_certificate(tampered) is False

    def test_witness_must_contain_negated_target(self):
        v = decide(parse("Box p --> p"))
        other = next(
            w for w in v.model.worlds if Not(v.model.target) not in w
        )
        assert verify_certificate(Countermodel(v.model, other)) is False

    def test_foreign_witness_rejected(self):
        v = decide(parse("Box p --> p"))
        assert verify_certificate(Countermodel(v.model, World((p,)))) is False

    def test_dropped_edges_break_truth_lemma(self):
        # Every edge source carries a negated box, so stripping all of a
        # source's edges makes that box vacuously true against membership.
        v = decide(parse("Box p --> q"))
        assert isinstance(v, Countermodel)
        sm = v.model
        assert sm.rel, "expected a nonempty relation"
        src = sm.rel[0][0]
        kept = tuple(e for e in sm.rel if e[0] != src)
        tampered = Countermodel(type(sm)(sm.target, sm.worlds, kept), v.witness)
        assert verify_certificate(tampered) is False

    def test_theorem_has_no_certificate(self):
        with pytest.raises(TypeError):
            verify_certificate(Theorem(p))  # type: ignore[arg-type]


class TestConsistent:
    def test_contradictory_pair(self):
        assert consistent([p, Not(p)]) is False

    def test_falsity(self):
        assert consistent([FALSE]) is False

    def test_box_false(self):
        assert consistent([Box(FALSE)]) is True

    def test_empty(self):
        assert consistent([]) is True


class TestExtendMaximalConsistent:
    def test_already_complete(self):
        ctx = closure_context(p)
        m = extend_maximal_consistent(ctx, [Not(p)])
        assert m.members == (Not(p),)

    def test_positive_tried_first(self):
        ctx = closure_context(p)
        m = extend_maximal_consistent(ctx, [])
        assert m.members == (p,)

    def test_inconsistent_seed_rejected(self):
        ctx = closure_context(p)
        with pytest.raises(ValueError):
            extend_maximal_consistent(ctx, [p, Not(p)])

    def test_out_of_closure_rejected(self):
        ctx = closure_context(p)
        with pytest.raises(ValueError):
            extend_maximal_consistent(ctx, [q])

    def test_duplicate_seed_rejected(self):
        ctx = closure_context(parse("p && p"))
        with pytest.raises(ValueError):
            extend_maximal_consistent(ctx, [p, p])

    def test_extension_is_world_containing_seed(self):
        ctx = closure_context(parse("Box p --> (p && q)"))
        seed = [Box(p), Not(q)]
        m = extend_maximal_consistent(ctx, seed)
        assert m in hintikka_worlds(ctx)
        assert all(s in m for s in seed)


class TestCertificateJson:
    def test_round_trip(self):
        v = decide(parse("Box p --> p"))
        doc = json.loads(json.dumps(certificate_to_json(v)))
        v2 = certificate_from_json(doc)
        assert v2 == v
        assert verify_certificate(v2) is True

    def test_tampered_valuation_rejected(self):
        v = decide(parse("Box p --> p"))
        doc = certificate_to_json(v)
        doc["val"] = {"p": doc["worlds"]}
        with pytest.raises(ValueError):
            certificate_from_json(doc)

    def test_missing_contents_rejected(self):
        v = decide(parse("Box p --> p"))
        doc = certificate_to_json(v)
        del doc["world_contents"]["w0"]
        with pytest.raises(ValueError):
            certificate_from_json(doc)

    def test_loaded_tampered_edge_fails_verification(self):
        v = decide(parse("Box p --> p"))
        doc = certificate_to_json(v)
        doc["rel"].append([doc["witness"], doc["witness"]])
        v2 = certificate_from_json(doc)
        assert verify_certificate(v2) is False


def test_decide_agrees_with_lemma_kernel():
    # Sample of catalogued conclusions must come back as theorems.
    from glkit.calculus import LEMMAS, lemma_statement

    sample = {0: [], 1: [p], 2: [p, q], 3: [p, q, Atom("r")], None: [p, q]}
    for name in ["imp_refl", "modusponens_th", "box_iff", "lob", "or_elim_th"]:
        f = lemma_statement(name, sample[LEMMAS[name].arity])
        assert isinstance(decide(f), Theorem), print_formula(f)
