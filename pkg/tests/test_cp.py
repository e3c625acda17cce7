import itertools
import random

import pytest

from domproof import oracle
from domproof.core import PbConstraint, clause_to_pb, cnf_to_pb
from domproof.cp import (
    Add,
    AxGe,
    AxLe,
    CpBuilder,
    CpDerivation,
    Div,
    Hyp,
    check_cp,
    is_valid_cp,
    negclause_bridge,
    res_to_cp,
)
from domproof.er import ErDerivation, ExtensionBlock, axiom_clauses
from domproof.errors import ProofRejected
from domproof.ordering import FIRST_GATES, INTERIOR_GATES, bit_axioms, bit_equation, role_count
from domproof.templates import TEMPLATES

from .helpers.refute import derive, refute

F = frozenset
ge = PbConstraint.geq


def test_division_rounds_up():
    pi = CpDerivation([ge([(2, 1), (2, 2)], 1)], [Hyp(0), Div(0, 2)], [ge([(1, 1), (1, 2)], 1)])
    assert check_cp(pi)[-1] == ge([(1, 1), (1, 2)], 1)


def test_division_needs_exact_divisibility():
    pi = CpDerivation([ge([(2, 1), (3, 2)], 1)], [Hyp(0), Div(0, 2)])
    with pytest.raises(ProofRejected) as e:
        check_cp(pi)
    assert e.value.step == 1


def test_addition():
    pi = CpDerivation([ge([(1, 1)], 1), ge([(-1, 1), (1, 2)], 0)], [Hyp(0), Hyp(1), Add(0, 1, 1, 1)], [ge([(1, 2)], 1)])
    assert is_valid_cp(pi)


def test_negative_multiplier_rejected():
    pi = CpDerivation([ge([(1, 1)], 1)], [Hyp(0), Hyp(0), Add(0, -1, 1, 1)])
    assert not is_valid_cp(pi)


def test_axioms_and_unmet_goal():
    assert check_cp(CpDerivation([], [AxGe(3), AxLe(3)])) == [ge([(1, 3)], 0), ge([(-1, 3)], -1)]
    assert not is_valid_cp(CpDerivation([], [AxGe(3)], [ge([(1, 3)], 1)]))


def test_res_to_cp_single_resolution():
    pi = derive([F({1, 2}), F({-1, 2})], [[2]])
    cp = res_to_cp(pi)
    assert check_cp(cp)
    assert ge([(1, 2)], 1) in cp.goals


def test_res_to_cp_refutation_reaches_contradiction():
    cp = res_to_cp(refute([F({1}), F({-1})]))
    assert check_cp(cp)[-1] == PbConstraint((), 1)


def test_res_to_cp_weakening_and_length():
    rng = random.Random(2)
    for _ in range(40):
        n = rng.randint(2, 5)
        gamma = [F(rng.choice((1, -1)) * v for v in rng.sample(range(1, n + 1), rng.randint(1, min(3, n)))) for _ in range(rng.randint(3, 9))]
        if oracle.is_satisfiable(gamma):
            continue
        pi = refute(gamma)
        cp = res_to_cp(pi)
        check_cp(cp)
        assert len(cp.steps) <= 6 * pi.size() + len(gamma)


def test_res_to_cp_refuses_extensions():
    from domproof.er import ExtendAlias

    with pytest.raises(ValueError):
        res_to_cp(ErDerivation([F({1})], [ExtendAlias(2, 1)]))


def test_negclause_bridge():
    pi = negclause_bridge(F({1}))
    assert pi.hypotheses == (ge([(1, 1)], 1).negate(),)
    assert pi.goals == (clause_to_pb([-1]),)
    assert check_cp(pi)
    two = negclause_bridge(F({1, -2}))
    check_cp(two)
    assert set(two.goals) == {clause_to_pb([-1]), clause_to_pb([2])}
    assert negclause_bridge(F()).goals == ()
    with pytest.raises(ValueError):
        negclause_bridge(F({1, -1}))


def test_negclause_bridge_is_linear():
    sizes = [len(negclause_bridge(F(range(1, k + 1))).steps) for k in (4, 8, 16, 32)]
    assert sizes[3] - sizes[2] == 2 * (sizes[2] - sizes[1])


def test_builder_weaken_to():
    b = CpBuilder([ge([(1, 1)], 1)])
    s = b.weaken_to(b.hyp(0), clause_to_pb([1, 2, -3]))
    assert b[s] == clause_to_pb([1, 2, -3])
    check_cp(b.derivation([clause_to_pb([1, 2, -3])]))


def test_cp_soundness_on_random_derivations():
    rng = random.Random(9)
    for _ in range(150):
        n = rng.randint(2, 5)
        hyps = [ge([(rng.randint(-3, 3), rng.choice((1, -1)) * rng.randint(1, n)) for _ in range(3)], rng.randint(-2, 3)) for _ in range(3)]
        b = CpBuilder(hyps)
        for i in range(3):
            b.hyp(i)
        for _ in range(5):
            k = rng.randrange(3)
            if k == 0:
                b.axge(rng.randint(1, n))
            elif k == 1:
                b.add(rng.randrange(len(b)), rng.randint(0, 3), rng.randrange(len(b)), rng.randint(0, 3))
            else:
                i = rng.randrange(len(b))
                d = rng.randint(2, 3)
                if all(c % d == 0 for _, c in b[i].terms):
                    b.div(i, d)
        pi = b.derivation([b[len(b) - 1]])
        derived = check_cp(pi)
        for bits in itertools.product((0, 1), repeat=n):
            vals = dict(zip(range(1, n + 1), bits))
            if all(h.evaluate(vals) for h in hyps):
                assert all(c.evaluate(vals) for c in derived)


# --- bit-equation templates --------------------------------------------------------


@pytest.mark.parametrize("shape", ["first", "interior"])
@pytest.mark.parametrize("direction", ["ge", "le"])
def test_templates_verify(shape, direction):
    first = shape == "first"
    gates = FIRST_GATES if first else INTERIOR_GATES
    roles = {r: r for r in range(1, role_count(first) + 1)}
    hyps = [clause_to_pb(c) for ax in bit_axioms(gates, roles) for c in axiom_clauses(ax)]
    want = bit_equation(roles, first)[0 if direction == "ge" else 1]
    pi = CpDerivation(hyps, TEMPLATES[shape][direction], [want])
    check_cp(pi)


@pytest.mark.parametrize("first", [True, False])
def test_bit_equation_holds_on_every_input(first):
    gates = FIRST_GATES if first else INTERIOR_GATES
    roles = {r: r for r in range(1, role_count(first) + 1)}
    inputs = (1, 2) if first else (1, 2, 3)
    block = ExtensionBlock(F(inputs), tuple(bit_axioms(gates, roles)))
    block.validate()
    eq_ge, eq_le = bit_equation(roles, first)
    for bits in itertools.product((0, 1), repeat=len(inputs)):
        vals = dict(zip(inputs, bits))
        vals.update(block.evaluate(vals))
        assert eq_ge.evaluate(vals) and eq_le.evaluate(vals)
    # and the equation is exactly the adder's arithmetic
    hyps = cnf_to_pb(block.clauses())
    assert oracle.entails(hyps, [eq_ge, eq_le])
