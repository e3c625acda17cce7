import itertools
import random

import pytest

from domproof import oracle
from domproof.er import (
    CircuitBuilder,
    CircuitDesc,
    DropZero,
    ErDerivation,
    ExtendAlias,
    ExtendAnd,
    ExtendConst,
    ExtensionBlock,
    Gate,
    Premise,
    ResolutionBuilder,
    Resolve,
    Weaken,
    axiom_clauses,
    check_er,
    circuit_axioms,
    compose_er,
    derived_clauses,
    hoist_extensions,
    is_valid_er,
    pull_conclusions,
    refutation_to_derivation,
)
from domproof.core import ZERO
from domproof.errors import ProofRejected

from .helpers.refute import derive, refute

F = frozenset


def test_extend_and_clause_order():
    assert axiom_clauses(ExtendAnd(3, 1, -2)) == [F({-1, 2, 3}), F({-3, 1}), F({-3, -2})]
    assert axiom_clauses(ExtendAlias(3, -1)) == [F({1, 3}), F({-3, -1})]
    assert axiom_clauses(ExtendConst(3, 0)) == [F({-3})]


def test_unit_refutation():
    pi = ErDerivation((F({1}), F({-1})), (Premise(0), Premise(1), Resolve(0, 1, 1, F())), (F(),))
    assert check_er(pi)[-1] == F()


def test_weakening_with_unseen_variable_rejected():
    pi = ErDerivation((F({1}),), (Premise(0), Weaken(0, F({1, 7}))))
    with pytest.raises(ProofRejected) as e:
        check_er(pi)
    assert e.value.step == 1
    assert e.value.rule == "weaken"
    # the same weakening is fine once 7 is protected (declared)
    assert is_valid_er(ErDerivation(pi.premises, pi.steps, (), frozenset({7})))


def test_extension_must_be_fresh():
    pi = ErDerivation((F({1, 2}),), (ExtendAnd(2, 1, -1),))
    with pytest.raises(ProofRejected, match="not fresh"):
        check_er(pi)
    protected = ErDerivation((F({1}),), (ExtendAlias(5, 1),), (), frozenset({5}))
    assert not is_valid_er(protected)


def test_wrong_pivot_and_wrong_resolvent():
    prem = (F({1, 2}), F({-1, 2}))
    assert not is_valid_er(ErDerivation(prem, (Premise(0), Premise(1), Resolve(0, 1, 2, F({2})))))
    assert not is_valid_er(ErDerivation(prem, (Premise(0), Premise(1), Resolve(0, 1, 1, F({2, 1})))))
    assert is_valid_er(ErDerivation(prem, (Premise(0), Premise(1), Resolve(0, 1, 1, F({2})))))


def test_drop_zero():
    prem = (F({1, ZERO}),)
    assert is_valid_er(ErDerivation(prem, (Premise(0), DropZero(0, F({1}))), (F({1}),)))
    assert not is_valid_er(ErDerivation((F({1}),), (Premise(0), DropZero(0, F({1})))))


def test_missing_conclusion():
    with pytest.raises(ProofRejected) as e:
        check_er(ErDerivation((F({1}),), (Premise(0),), (F({2}),)))
    assert e.value.step is None


def _random_cnf(rng, n, m, width=3):
    return [F(rng.choice((1, -1)) * v for v in rng.sample(range(1, n + 1), min(width, n))) for _ in range(m)]


def test_accepted_derivations_are_sound():
    rng = random.Random(1)
    checked = 0
    for _ in range(80):
        n = rng.randint(2, 6)
        gamma = _random_cnf(rng, n, rng.randint(2, 8))
        vs = sorted({abs(l) for c in gamma for l in c})
        b = ResolutionBuilder(gamma)
        for i in range(len(gamma)):
            b.premise(i)
        y = n + 1
        for _ in range(rng.randint(0, 2)):
            b.extend(ExtendAnd(y, rng.choice((1, -1)) * rng.choice(vs), rng.choice((1, -1)) * rng.choice(vs)))
            y += 1
        for _ in range(6):
            i, j = rng.sample(range(len(b)), 2) if len(b) > 1 else (0, 0)
            ci, cj = b.clause(i), b.clause(j)
            piv = [l for l in ci if -l in cj]
            if len(piv) == 1:
                b.resolve(i, j, piv[0])
        pi = b.derivation([b.clause(k) for k in range(len(b))])
        check_er(pi)
        assert oracle.extends(gamma, pi.conclusions, vs)
        checked += 1
    assert checked == 80


# --- circuits -------------------------------------------------------------------


def test_circuit_axioms_gate_kinds():
    c = CircuitDesc(2, (Gate("and", (1, 2)),), 3)
    block = circuit_axioms(c, [1, 2])
    assert block.axioms == (ExtendAnd(3, 1, 2),)
    assert block.output == 3
    n = circuit_axioms(CircuitDesc(1, (Gate("not", (1,)),)), [4])
    assert n.axioms == (ExtendAlias(5, -4),)


def test_circuit_blocks_have_one_extension_per_input():
    rng = random.Random(4)
    for _ in range(30):
        cb = CircuitBuilder(3)
        refs = cb.inputs()
        for _ in range(rng.randint(1, 8)):
            a, b = rng.choice(refs) * rng.choice((1, -1)), rng.choice(refs) * rng.choice((1, -1))
            refs.append(rng.choice([cb.and_, cb.or_, cb.xor])(a, b))
        circ = cb.build(outputs=[refs[-1]])
        block = circuit_axioms(circ, [1, 2, 3])
        for bits in itertools.product((0, 1), repeat=3):
            vals = circ.evaluate(list(bits))
            ext = block.evaluate(dict(zip((1, 2, 3), bits)))
            assert [ext[y] for y in block.defined] == vals[4:]
            # the extension is the only one: fixing the base leaves one model
            unit = [F({v if b else -v}) for v, b in zip((1, 2, 3), bits)]
            assert len(oracle.all_models(unit + block.clauses())) == 1


def test_circuit_rejects_forward_references():
    with pytest.raises(ValueError):
        CircuitDesc(1, (Gate("and", (1, 3)),))


# --- transformers -------------------------------------------------------------------


def test_compose_renames_shared_extension_variable():
    gamma = (F({1}), F({-1, 2}))
    b1 = ResolutionBuilder(gamma)
    b1.extend(ExtendAlias(5, 1))
    b1.resolve(b1.premise(0), b1.premise(1), 1)
    pi1 = b1.derivation([F({2})])
    b2 = ResolutionBuilder((F({2}),))
    b2.extend(ExtendAlias(5, 2))
    b2.resolve(b2.premise(0), 0, 2)
    pi2 = b2.derivation([F({5})])
    out = compose_er(pi1, pi2)
    check_er(out)
    assert len(out.extension_vars()) == len(set(out.extension_vars())) == 2
    assert len(out) <= len(pi1) + len(pi2) + 2


def test_pull_conclusions_with_one_and():
    gamma = (F({1}), F({2}))
    block = ExtensionBlock(F({1, 2}), (ExtendAnd(3, 1, 2),))
    b = ResolutionBuilder(gamma)
    b.extend(ExtendAnd(3, 1, 2))
    t = b.derive_by_cases(list(range(len(b))) + [b.premise(0), b.premise(1)], F({3}))
    pi1 = b.derivation(block.clauses() + [b.clause(t)])
    out = pull_conclusions(pi1, block)
    check_er(out)
    assert tuple(out.premises) == gamma + tuple(block.clauses())
    assert F({3}) in set(derived_clauses(out))
    assert pull_conclusions(pi1, ExtensionBlock(F({1, 2}))).steps == pi1.steps


def test_hoist_keeps_order_and_rechecks():
    gamma = (F({1, 2}),)
    b = ResolutionBuilder(gamma)
    b.premise(0)
    b.extend(ExtendAnd(3, 1, 2))
    b.extend(ExtendAlias(4, -3))
    pi = b.derivation([F({-4, -3})])
    flat, block = hoist_extensions(pi)
    assert flat.is_resolution_only()
    assert block.defined == (3, 4)
    block.validate()
    check_er(flat)
    same, empty = hoist_extensions(derive(gamma, [[1, 2]]))
    assert len(empty) == 0


def test_refutation_to_derivation_small():
    pi = ErDerivation((F({-9}), F({9})), (Premise(0), Premise(1), Resolve(1, 0, 9, F())), (F(),))
    out = refutation_to_derivation(pi, 9)
    check_er(out)
    assert F({9}) in set(derived_clauses(out)) | set(out.premises)


def test_refutation_to_derivation_keeps_extensions():
    gamma = [F({1, 5}), F({-1, 5}), F({-5, 2})]
    b = ResolutionBuilder(gamma + [F({-2})])
    b.extend(ExtendAlias(7, 1))
    pool = [b.premise(i) for i in range(4)]
    b.derive_by_cases(pool, F())
    pi = b.derivation([F()])
    check_er(pi)
    out = refutation_to_derivation(pi, 2)
    check_er(out)
    assert F({2}) in set(derived_clauses(out))
    assert out.extensions()[0] == ExtendAlias(7, 1)
    assert oracle.extends(gamma, [F({2})], [1, 2, 5])


def test_refutation_to_derivation_requires_unit():
    with pytest.raises(ValueError):
        refutation_to_derivation(refute([F({1}), F({-1})]), 4)
