import random

import pytest

from domproof import oracle
from domproof.core import ONE, ZERO, PbConstraint, Substitution, clause_to_pb, cnf_to_pb
from domproof.cp import CpBuilder, CpDerivation
from domproof.dominance import (
    TOP,
    Configuration,
    Deletion,
    Dominance,
    DomProof,
    General,
    ImplDeriv,
    Linear,
    OrderChange,
    Redundance,
    Transfer,
    apply_step,
    check_dom,
    is_valid_dom,
    linear_order_formula,
    run_dom,
)
from domproof.er import ExtendAlias, ExtendAnd, ExtendConst
from domproof.errors import ProofRejected
from domproof.translate import extension_redundance

from .helpers import dom_fuzz
from .helpers.dom_fuzz import linear_as_general, random_cnf, walk, weak_mode_cases, witness

ge = PbConstraint.geq
BOTTOM = PbConstraint((), 1)


def _cl(*lits):
    return clause_to_pb(lits)


def _config(clauses, derived=(), order=TOP, zvars=()):
    return Configuration(frozenset(_cl(*c) for c in clauses), frozenset(_cl(*c) for c in derived), order, zvars)


# --- the extension-axiom triple ---------------------------------------------------


def test_extension_and_triple_from_empty_context():
    steps = extension_redundance([], ExtendAnd(3, 1, 2))
    assert [type(s) for s in steps] == [Redundance] * 3
    a, b, c = (s.constraint for s in steps)
    assert a == ge([(-1, 1), (-1, 2), (1, 3)], -1)  # (1−u) + (1−v) + y ≥ 1
    assert b == _cl(-3, 1) and c == _cl(-3, 2)
    assert steps[0].omega == Substitution({3: 1}) and steps[2].omega == Substitution({3: ZERO})
    cfg = Configuration.initial([])
    for s in steps:
        cfg = apply_step(cfg, s)
    assert cfg.derived == {a, b, c}


def test_sigma_image_of_A():
    a = ge([(-1, 1), (-1, 2), (1, 3)], -1)
    assert a.substitute(Substitution({3: 1})) == ge([(2, ONE), (-1, 2)], 1)
    assert a.substitute(Substitution({3: 1})) == PbConstraint(((2, -1),), -1)


def test_alias_and_constant_axioms():
    alias = extension_redundance([], ExtendAlias(5, -1))
    assert len(alias) == 2
    const = extension_redundance([], ExtendConst(5, 1))
    assert len(const) == 1 and const[0].omega == Substitution({5: ONE})
    for steps in (alias, const):
        cfg = Configuration.initial([])
        for s in steps:
            cfg = apply_step(cfg, s)


def test_extension_triple_in_a_busy_context():
    rng = random.Random(3)
    for _ in range(10):
        ctx = cnf_to_pb(random_cnf(rng, 5, 8))
        cfg = Configuration(frozenset(ctx), frozenset(), Linear((4, 2, 1)), (1, 2, 3))
        for s in extension_redundance(ctx, ExtendAnd(7, -1, 4), cfg.order, cfg.zvars):
            cfg = apply_step(cfg, s)


def test_extension_needs_a_fresh_variable():
    with pytest.raises(ValueError):
        extension_redundance([_cl(3)], ExtendAnd(3, 1, 2))
    with pytest.raises(ValueError):
        extension_redundance([], ExtendAnd(3, 1, 2), Linear((1,)), (3,))


# --- linear orders ------------------------------------------------------------------


def test_linear_order_formula():
    (c,) = linear_order_formula(Linear((1, 2)), (1, 2), (1, 2))
    assert c == PbConstraint((), 0)
    (c,) = linear_order_formula(Linear((2, 1)), (3, 4), (1, 2))  # 2x3 + x4 ≤ 2x1 + x2
    assert c == ge([(2, 1), (1, 2), (-2, 3), (-1, 4)], 0)
    assert linear_order_formula(TOP, (), ()) == ()
    with pytest.raises(ValueError):
        linear_order_formula(Linear((1,)), (1, 2), (3, 4))


def test_lex_order_with_wide_coefficients():
    b = tuple(1 << i for i in range(64))
    (c,) = linear_order_formula(Linear(b), range(1, 65), range(65, 129))
    assert max(abs(a) for _, a in c.terms) == 1 << 63
    strict = c.negate()  # Σ 2^i x_i ≥ Σ 2^i y_i + 1
    assert strict.bound == 1


# --- one directed case per rule -----------------------------------------------------


def _dominance_on_x1(cfg):
    """C = ¬x1 with ω = {x1 ↦ 0} under the order x1."""
    c = _cl(-1)
    omega = Substitution({1: ZERO})
    image = (omega(1),)
    goals = [d.substitute(omega) for d in cfg.core] + list(cfg.order_formula(image, cfg.zvars))
    b, _ = witness(cfg.core | cfg.derived, frozenset({-1}), goals)
    (o,) = cfg.order_formula(cfg.zvars, image)
    r = CpBuilder([c.negate(), o])
    bottom = r.add(r.hyp(0), 1, r.hyp(1), 1)
    return Dominance(c, omega, b.derivation(goals), r.derivation([r[bottom]]))


def test_dominance_prefers_the_lighter_value():
    # x2 is forced and x1 is free, so any model can drop x1 to 0
    cfg = _config([[1, 2], [2]], order=Linear((1,)), zvars=(1,))
    step = _dominance_on_x1(cfg)
    after = apply_step(cfg, step)
    assert _cl(-1) in after.derived
    assert oracle.config_valid(after)


def test_weak_mode_needs_empty_derived_set():
    cfg = _config([[1, 2], [2]], derived=[[2, 3]], order=Linear((1,)), zvars=(1,))
    step = _dominance_on_x1(cfg)
    assert _cl(-1) in apply_step(cfg, step, "linear").derived
    with pytest.raises(ProofRejected, match="empty derived"):
        apply_step(cfg, step, "weak")
    empty = _config([[1, 2], [2]], order=Linear((1,)), zvars=(1,))
    assert _cl(-1) in apply_step(empty, _dominance_on_x1(empty), "weak").core


def test_weak_mode_directed_cases():
    for formula, prefix, step, nonempty in weak_mode_cases(random.Random(7), 20):
        linear = DomProof(formula, prefix + [step], "linear")
        run_dom(linear)
        weak = DomProof(formula, prefix + [step], "weak")
        if nonempty:
            with pytest.raises(ProofRejected) as e:
                run_dom(weak)
            assert e.value.step == len(prefix) and e.value.rule == "dominance"
        else:
            run_dom(weak)


def test_core_deletion_needs_a_witness():
    cfg = _config([[1, 2], [-1]])
    with pytest.raises(ProofRejected, match="redundance witness"):
        apply_step(cfg, Deletion((), _cl(1, 2)))
    p = DomProof(cnf_to_pb([[1, 2], [-1]]), [Deletion((), _cl(1, 2))])
    with pytest.raises(ProofRejected) as e:
        check_dom(p)
    assert (e.value.step, e.value.rule) == (0, "deletion")


def test_core_deletion_with_witness():
    # x1 ∨ x2 is redundant w.r.t. {¬x1}: ω = {x2 ↦ 1} satisfies it
    cfg = _config([[1, 2], [-1]])
    victim = _cl(1, 2)
    base = cfg.core - {victim}
    omega = Substitution({2: ONE})
    goals = [d.substitute(omega) for d in base | {victim}]
    b, _ = witness(base, frozenset({1, 2}), goals)
    after = apply_step(cfg, Deletion((), victim, omega, b.derivation(goals)))
    assert after.core == {_cl(-1)}


def test_deleting_unknown_constraints():
    cfg = _config([[1]], derived=[[1, 2]])
    with pytest.raises(ProofRejected):
        apply_step(cfg, Deletion((_cl(2),)))
    assert apply_step(cfg, Deletion((_cl(1, 2),))).derived == frozenset()


def test_transfer():
    cfg = _config([[1]], derived=[[1, 2]])
    assert _cl(1, 2) in apply_step(cfg, Transfer((_cl(1, 2),))).core
    with pytest.raises(ProofRejected, match="neither"):
        apply_step(cfg, Transfer((_cl(3),)))


def test_implicational_step():
    cfg = _config([[1, 2], [-2]])
    b, _ = witness(cfg.core, None, [_cl(1)])
    assert _cl(1) in apply_step(cfg, ImplDeriv(_cl(1), b.derivation([_cl(1)]))).derived
    with pytest.raises(ProofRejected, match="not derived"):
        apply_step(cfg, ImplDeriv(_cl(2), CpDerivation((), ())))


def test_redundance_checks_the_order():
    # x1 ≥ 1 by ω = {x1 ↦ 1}: fine under ⊤, but it increases x1 under the order x1
    cfg = _config([[1, 2]])
    omega = Substitution({1: ONE})
    goals = [d.substitute(omega) for d in cfg.core | {_cl(1)}]
    b, _ = witness(cfg.core, frozenset({1}), goals)
    step = Redundance(_cl(1), omega, b.derivation(goals))
    apply_step(cfg, step)
    ordered = _config([[1, 2]], order=Linear((1,)), zvars=(1,))
    with pytest.raises(ProofRejected, match="redundance witness"):
        apply_step(ordered, step)


def test_order_change_rules():
    cfg = _config([[1, 2]], derived=[[1, 2, 3]])
    with pytest.raises(ProofRejected, match="derived set is empty"):
        apply_step(cfg, OrderChange(Linear((1,)), (1,)))
    clean = _config([[1, 2]])
    assert apply_step(clean, OrderChange(Linear((1, 2)), (1, 2))).order == Linear((1, 2))
    general = linear_as_general((2, 1))
    with pytest.raises(ProofRejected, match="only admits linear"):
        apply_step(clean, OrderChange(general, (1, 2)), "linear")
    assert apply_step(clean, OrderChange(general, (1, 2)), "full").order == general


def test_general_order_needs_sound_proofs():
    good = linear_as_general((1, 1))
    broken = General(good.formula, 2, good.refl, CpDerivation(good.trans.hypotheses, (), good.trans.goals))
    clean = _config([[1, 2]])
    with pytest.raises(ProofRejected, match="transitivity"):
        apply_step(clean, OrderChange(broken, (1, 2)), "full")
    with pytest.raises(ProofRejected):
        apply_step(clean, OrderChange(General(good.formula, 2), (1, 2)), "full")
    with pytest.raises(ValueError):
        General((ge([(1, 5)], 0),), 2)


def test_refutation_must_end_in_contradiction():
    assert not is_valid_dom(DomProof(cnf_to_pb([[1]]), []))
    assert is_valid_dom(DomProof([BOTTOM], []))


# --- properties over fuzzed walks ---------------------------------------------------


@pytest.mark.parametrize("mode", ["full", "linear", "weak"])
def test_accepted_steps_preserve_validity(mode):
    rng = random.Random({"full": 1, "linear": 2, "weak": 3}[mode])
    seen = set()
    for _ in range(25):
        n = rng.randint(3, 5)
        formula = cnf_to_pb(random_cnf(rng, n, rng.randint(2, 6)))
        if not oracle.is_satisfiable(formula):
            continue
        for before, step, after, rule in walk(rng, formula, n, 8, mode):
            assert oracle.config_valid(before) and oracle.config_valid(after), rule
            seen.add(rule)
    assert seen == set(dom_fuzz.RULES)


def test_fuzzed_refutations_only_for_unsat_inputs():
    rng = random.Random(11)
    refuted = 0
    for _ in range(40):
        n = rng.randint(2, 5)
        formula = cnf_to_pb(random_cnf(rng, n, rng.randint(3, 10)))
        steps, cfg = [], Configuration.initial(formula)
        for _, step, after, _ in walk(rng, formula, n, 5):
            steps.append(step)
            cfg = after
        last = dom_fuzz.refutation_step(cfg)
        if last is not None:
            check_dom(DomProof(formula, steps + [last]))
            refuted += 1
            assert not oracle.is_satisfiable(formula)
    assert refuted > 5


def test_broken_witness_substitution_is_rejected():
    rng = random.Random(5)
    rejected = 0
    for _ in range(80):
        n = 4
        formula = cnf_to_pb(random_cnf(rng, n, 4))
        if not oracle.is_satisfiable(formula):
            continue
        for before, step, _, rule in walk(rng, formula, n, 8):
            if rule != "redundance":
                continue
            other = dom_fuzz.random_omega(rng, n)
            c = step.constraint
            both = before.core | before.derived
            need = [d.substitute(other) for d in both | {c}]
            need += before.order_formula(tuple(other(z) for z in before.zvars), before.zvars)
            if oracle.entails(list(both) + [c.negate()], need):
                continue
            with pytest.raises(ProofRejected):
                apply_step(before, Redundance(c, other, step.proof))
            rejected += 1
    assert rejected >= 10
