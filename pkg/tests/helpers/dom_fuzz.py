"""Random accepted dominance steps on small clausal configurations.

Every configuration reached here keeps its core and derived sets clausal,
so CP witnesses can come from the decision-tree prover: ``¬C`` is first
split into unit clauses, then each required constraint is proved from the
clauses.  Candidates are screened with the oracle before any CP is built.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from domproof import oracle
from domproof.core import ONE, ZERO, PbConstraint, Substitution, clause_to_pb
from domproof.cp import CpBuilder, negclause_into
from domproof.dominance import (
    TOP,
    Configuration,
    Deletion,
    Dominance,
    General,
    ImplDeriv,
    Linear,
    OrderChange,
    Redundance,
    Transfer,
    apply_step,
    linear_order_formula,
)

from .cp_search import prove

RULES = ("implicational", "redundance", "deletion", "transfer", "dominance", "order-change")


def as_clause(c: PbConstraint) -> frozenset | None:
    lits, bound = c.literal_form()
    if bound == 1 and all(a == 1 for a, _ in lits):
        return frozenset(l for _, l in lits)
    return None


def random_clause(rng: random.Random, n: int, width: int | None = None) -> frozenset:
    k = width or rng.randint(1, min(3, n))
    return frozenset(rng.choice((1, -1)) * v for v in rng.sample(range(1, n + 1), k))


def random_cnf(rng: random.Random, n: int, m: int) -> list[frozenset]:
    return [random_clause(rng, n) for _ in range(m)]


def random_omega(rng: random.Random, n: int, c: frozenset | None = None) -> Substitution:
    """Partial assignments, literal renamings, or ``C``'s literal set true."""
    kind = rng.randrange(4)
    vs = list(range(1, n + 1))
    if kind == 0 and c:
        lit = rng.choice(sorted(c))
        return Substitution({abs(lit): ONE if lit > 0 else ZERO})
    if kind == 1:
        return Substitution({v: rng.choice((ONE, ZERO)) for v in rng.sample(vs, rng.randint(1, min(2, n)))})
    if kind == 2 and n >= 2:
        a, b = rng.sample(vs, 2)
        sa, sb = rng.choice((1, -1)), rng.choice((1, -1))
        return Substitution({a: sa * b, b: sb * a})
    return Substitution({v: rng.choice((1, -1)) * rng.choice(vs) for v in rng.sample(vs, rng.randint(1, min(3, n)))})


def _clausal(constraints: Iterable[PbConstraint]) -> list[tuple[PbConstraint, frozenset]]:
    out = []
    for c in constraints:
        cl = as_clause(c)
        if cl is not None:
            out.append((c, cl))
    return out


def witness(available: Iterable[PbConstraint], neg_of: frozenset | None, goals: Sequence[PbConstraint],
            extra: Sequence[PbConstraint] = ()) -> tuple[CpBuilder, dict[PbConstraint, int]]:
    """CP steps deriving every goal that is not already available.

    ``neg_of`` is the clause whose negation is a hypothesis; ``extra``
    lists further (non-clausal) hypotheses the caller will use itself.
    """
    available = list(available)
    b = CpBuilder()
    pool: list[frozenset] = []
    steps: list = []
    for c, cl in _clausal(available):
        i = b.add_hypothesis(c)
        pool.append(cl)
        steps.append(lambda i=i: b.hyp(i))
    if neg_of is not None:
        neg = b.hyp(b.add_hypothesis(clause_to_pb(neg_of).negate()))
        for lit, s in negclause_into(b, neg, sorted(neg_of)).items():
            pool.append(frozenset([-lit]))
            steps.append(lambda s=s: s)
    for c in extra:
        b.add_hypothesis(c)
    got: dict[PbConstraint, int] = {}
    have = set(available)
    for g in goals:
        if g in have or g in got:
            continue
        if g.is_trivial():
            got[g] = b.tautology(g)
        else:
            got[g] = prove(pool, g, builder=b, hyp_step=lambda i: steps[i]())
    return b, got


def _order_goals(cfg: Configuration, omega: Substitution) -> list[PbConstraint]:
    image = tuple(omega(z) for z in cfg.zvars)
    return list(cfg.order_formula(image, cfg.zvars))


def _hyps(base, neg_of):
    return list(base) + ([clause_to_pb(neg_of).negate()] if neg_of is not None else [])


# --- one generator per rule -------------------------------------------------


def make_impl(rng, cfg, n):
    both = cfg.core | cfg.derived
    clauses = [cl for _, cl in _clausal(both)]
    target = None
    if len(clauses) >= 2 and rng.random() < 0.6:
        a, b = rng.sample(clauses, 2)
        piv = [l for l in a if -l in b]
        if len(piv) == 1:
            target = (a - {piv[0]}) | (b - {-piv[0]})
    if target is None:
        target = random_clause(rng, n)
    goal = clause_to_pb(target)
    if goal.is_contradiction() or not oracle.entails(list(both), [goal]):
        return None
    b, _ = witness(both, None, [goal])
    return ImplDeriv(goal, b.derivation([goal]))


def _redundance_parts(rng, cfg, n, base):
    c = random_clause(rng, n)
    omega = random_omega(rng, n, c)
    pb = clause_to_pb(c)
    goals = [d.substitute(omega) for d in set(base) | {pb}] + _order_goals(cfg, omega)
    if not oracle.entails(_hyps(base, c), goals):
        return None
    b, _ = witness(base, c, goals)
    return pb, omega, b.derivation(goals)


def make_redundance(rng, cfg, n):
    parts = _redundance_parts(rng, cfg, n, cfg.core | cfg.derived)
    return Redundance(*parts) if parts else None


def make_deletion(rng, cfg, n):
    dropped = tuple(c for c in sorted(cfg.derived, key=str) if rng.random() < 0.5)
    if rng.random() < 0.5 or not cfg.core:
        return Deletion(dropped) if dropped or rng.random() < 0.2 else None
    victim = rng.choice(sorted(cfg.core, key=str))
    cl = as_clause(victim)
    if cl is None:
        return None
    base = cfg.core - {victim}
    for _ in range(4):
        omega = random_omega(rng, n, cl)
        goals = [d.substitute(omega) for d in base | {victim}] + _order_goals(cfg, omega)
        if oracle.entails(_hyps(base, cl), goals):
            b, _ = witness(base, cl, goals)
            return Deletion(dropped, victim, omega, b.derivation(goals))
    return None


def make_transfer(rng, cfg, n):
    if not cfg.derived:
        return None
    pick = [c for c in sorted(cfg.derived, key=str) if rng.random() < 0.6]
    return Transfer(tuple(pick) or (min(cfg.derived, key=str),))


def dominance_parts(rng, cfg, n):
    """(C, ω, proof, refutation) for a random candidate, or None."""
    both = cfg.core | cfg.derived
    c = random_clause(rng, n)
    omega = random_omega(rng, n, c)
    lin = cfg.order.linear_coefficients() if not isinstance(cfg.order, General) else None
    weighted = [(z, b) for z, b in zip(cfg.zvars, lin or ()) if b]
    if weighted and rng.random() < 0.6:
        # ¬C puts z at its heavy value and ω moves it to the light one
        z, b = rng.choice(weighted)
        heavy = z if b > 0 else -z
        c = (c - {z, -z}) | {-heavy}
        omega = Substitution({**dict(omega.items()), z: ZERO if b > 0 else ONE})
    image = tuple(omega(z) for z in cfg.zvars)
    goals = [d.substitute(omega) for d in cfg.core] + list(cfg.order_formula(image, cfg.zvars))
    hyps = _hyps(both, c)
    if not oracle.entails(hyps, goals):
        return None
    ge = cfg.order_formula(cfg.zvars, image)
    strict = ge[0].negate() if ge else PbConstraint((), 1)
    if len(ge) > 1 or not oracle.entails(hyps, [strict]):
        return None
    b, _ = witness(both, c, goals)
    proof = b.derivation(goals)
    r, got = witness(both, c, [strict], ge)
    s = got.get(strict)
    if s is None:  # the strict constraint is available as it stands
        s = r.hyp(r.add_hypothesis(strict))
    bottom = r.add(s, 1, r.hyp_of(ge[0]), 1) if ge else s
    assert r[bottom] == PbConstraint((), 1)
    return clause_to_pb(c), omega, proof, r.derivation([r[bottom]])


def make_dominance(rng, cfg, n, mode="linear"):
    if mode == "weak" and cfg.derived:
        return None
    parts = dominance_parts(rng, cfg, n)
    return Dominance(*parts) if parts else None


def linear_as_general(coefs: Sequence[int]) -> General:
    """The linear order ``Σ b_i x_i ≤ Σ b_i y_i`` with its CP order proofs."""
    k = len(coefs)
    u, v, w = range(1, k + 1), range(k + 1, 2 * k + 1), range(2 * k + 1, 3 * k + 1)
    lin = Linear(coefs)
    formula = linear_order_formula(lin, list(u), list(v))
    refl = CpBuilder()
    refl_goals = list(linear_order_formula(lin, list(u), list(u)))
    for g in refl_goals:
        refl.tautology(g)
    uv = linear_order_formula(lin, list(u), list(v))
    vw = linear_order_formula(lin, list(v), list(w))
    uw = linear_order_formula(lin, list(u), list(w))
    trans = CpBuilder(list(uv) + list(vw))
    if uv:
        trans.add(trans.hyp(0), 1, trans.hyp(1), 1)
    return General(formula, k, refl.derivation(refl_goals), trans.derivation(uw))


def make_order_change(rng, cfg, n, mode="linear"):
    if cfg.derived:
        return None
    k = rng.randint(0, min(4, n))
    zs = tuple(rng.sample(range(1, n + 1), k))
    if rng.random() < 0.5:
        coefs = tuple(1 << (k - 1 - i) for i in range(k))  # lexicographic
    else:
        coefs = tuple(rng.randint(-3, 3) for _ in range(k))
    if mode == "full" and rng.random() < 0.5:
        return OrderChange(linear_as_general(coefs), zs)
    return OrderChange(Linear(coefs) if k else TOP, zs)


MAKERS = {
    "implicational": make_impl,
    "redundance": make_redundance,
    "deletion": make_deletion,
    "transfer": make_transfer,
    "dominance": make_dominance,
    "order-change": make_order_change,
}


def make_step(rng, cfg, n, rule, mode="linear", tries=12):
    maker = MAKERS[rule]
    for _ in range(tries):
        if rule in ("dominance", "order-change"):
            step = maker(rng, cfg, n, mode)
        else:
            step = maker(rng, cfg, n)
        if step is not None:
            return step
    return None


def walk(rng, formula, n, length, mode="linear", rules=RULES):
    """Apply up to ``length`` random accepted steps; yields (before, step, after, rule)."""
    cfg = Configuration.initial(formula)
    for k in range(length):
        rule = rng.choice(rules)
        if k == 0 and "order-change" in rules and rng.random() < 0.7:
            rule = "order-change"
        step = make_step(rng, cfg, n, rule, mode)
        if step is None:
            continue
        after = apply_step(cfg, step, mode)
        yield cfg, step, after, rule
        cfg = after


def refutation_step(cfg: Configuration) -> ImplDeriv | None:
    """``0 ≥ 1`` by implication when core ∪ derived is unsatisfiable."""
    both = cfg.core | cfg.derived
    bottom = PbConstraint((), 1)
    if cfg.is_refuted() or oracle.is_satisfiable(list(both)):
        return None
    b, _ = witness(both, None, [bottom])
    return ImplDeriv(bottom, b.derivation([bottom]))


def weak_mode_cases(rng, count, n_range=(3, 6)):
    """Dominance steps accepted in linear mode, each after a dominance-free prefix.

    Returns ``(formula, prefix, step, derived_nonempty)`` tuples; about half
    of them fire with a nonempty derived set.
    """
    plain = tuple(r for r in RULES if r != "dominance")
    out = []
    want_nonempty = True
    while len(out) < count:
        n = rng.randint(*n_range)
        formula = [clause_to_pb(c) for c in random_cnf(rng, n, rng.randint(2, 6))]
        if not oracle.is_satisfiable(formula):
            continue
        prefix = []
        cfg = Configuration.initial(formula)
        for _, step, after, _ in walk(rng, formula, n, rng.randint(1, 5), "linear", plain):
            prefix.append(step)
            cfg = after
        if bool(cfg.derived) != want_nonempty:
            if want_nonempty:
                step = make_step(rng, cfg, n, "implicational")
                if step is None:
                    continue
                prefix.append(step)
                cfg = apply_step(cfg, step)
            else:
                prefix.append(Deletion(tuple(cfg.derived)))
                cfg = apply_step(cfg, prefix[-1])
        step = make_step(rng, cfg, n, "dominance", "linear", tries=40)
        if step is None:
            continue
        out.append((formula, prefix, step, bool(cfg.derived)))
        want_nonempty = not want_nonempty
    return out
