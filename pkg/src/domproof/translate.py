"""Compile ER-PLS proofs into linear-dominance proofs.

An ER rule becomes implicational steps (the usual resolution-to-CP
simulation) with each extension axiom introduced by redundance, followed
by a transfer of the conclusions into the core and a reset of the derived
set.  A dominance rule switches to the lexicographic order on x̄,
introduces every extension axiom it needs by redundance, and then derives
``C*`` with a single dominance step whose witnesses come from one
resolution derivation ``Γ ∧ Δ ∧ ¬C ⊢ Γ↾ω ∧ [x̄↾ω <lex x̄]``.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .core import (
    ONE,
    ZERO,
    FreshVars,
    PbConstraint,
    Substitution,
    clause_to_pb,
    cnf_to_pb,
    cnf_vars,
    is_tautologous,
    sub_clause,
    var,
)
from .cp import CpBuilder, negclause_into, res_to_cp_into, resolvent_cp
from .dominance import (
    TOP,
    Deletion,
    Dominance,
    DomProof,
    DomStep,
    ImplDeriv,
    Linear,
    OrderChange,
    OrderSpec,
    Redundance,
    Transfer,
)
from .er import (
    EXTENSIONS,
    ErDerivation,
    ExtendAlias,
    ExtendAnd,
    ExtendConst,
    Extension,
    Premise,
    ResolutionBuilder,
    Resolve,
    Weaken,
    axiom_clauses,
    derived_clauses,
    hoist_extensions,
    replay,
)
from .erpls import DomRule, ErplsProof, ErRule, check_erpls, extend_cnf, image_clauses, premises_a
from .ordering import derive_L_into, gen_lex, lex_weights, strictify


def _const(bit: int) -> int:
    return ONE if bit else ZERO


def redundance_witness(
    available: Iterable[PbConstraint],
    c: PbConstraint,
    omega: Substitution,
    order_goals: Sequence[PbConstraint],
    touched: Iterable[int] | None = None,
) -> Redundance:
    """Redundance step for ``c`` when every missing image is trivial or a weakening of ``¬c``.

    ``touched`` limits the search to constraints over those variables (the
    rest are fixed by ``omega``), which keeps long contexts cheap.
    """
    available = set(available)
    moved = set(omega) if touched is None else set(touched)
    required = [d.substitute(omega) for d in available | {c} if d.vars() & moved] + list(order_goals)
    b = CpBuilder()
    neg_step = None
    goals = []
    for g in required:
        if g in available or g in goals:
            continue
        goals.append(g)
        if g.is_trivial():
            b.tautology(g)
            continue
        if neg_step is None:
            neg_step = b.hyp(b.add_hypothesis(c.negate()))
        b.weaken_to(neg_step, g)
    return Redundance(c, omega, b.derivation(goals))


def extension_redundance(
    context: Iterable[PbConstraint], axiom: Extension, order: OrderSpec = TOP, zvars: Sequence[int] = ()
) -> list[Redundance]:
    """Introduce the clauses of ``axiom`` one redundance step at a time.

    For ``y ↔ u ∧ v`` the first two clauses use ``y ↦ u`` and the last uses
    ``y ↦ 0``; aliases and constants use ``y`` ↦ its definition throughout.
    Clauses already present are skipped.
    """
    y = axiom.y
    context = set(context)
    if any(y in d.vars() for d in context):
        raise ValueError(f"x{y} already occurs in the context")
    if y in set(zvars):
        raise ValueError(f"x{y} is an order variable")
    if isinstance(axiom, ExtendAnd):
        sigmas = [Substitution({y: axiom.u}), Substitution({y: axiom.u}), Substitution({y: ZERO})]
    elif isinstance(axiom, ExtendAlias):
        sigmas = [Substitution({y: axiom.u})] * 2
    elif isinstance(axiom, ExtendConst):
        sigmas = [Substitution({y: _const(axiom.bit)})]
    else:
        raise TypeError(f"not an extension axiom: {axiom!r}")
    zvars = tuple(zvars)
    out = []
    for cl, sigma in zip(axiom_clauses(axiom), sigmas):
        c = clause_to_pb(cl)
        if c in context:
            continue
        goals = order.instantiate(tuple(sigma(z) for z in zvars), zvars)
        out.append(redundance_witness(context, c, sigma, goals, [y]))
        context.add(c)
    return out


class _Tracker:
    """Core and derived sets of the configuration being emitted."""

    def __init__(self, core: Iterable[PbConstraint]):
        self.core = set(core)
        self.derived: set[PbConstraint] = set()
        self.order: OrderSpec = TOP
        self.zvars: tuple[int, ...] = ()
        self.steps: list[DomStep] = []

    def has(self, c: PbConstraint) -> bool:
        return c in self.core or c in self.derived

    def emit(self, step: DomStep) -> None:
        self.steps.append(step)
        if isinstance(step, (ImplDeriv, Redundance, Dominance)):
            self.derived.add(step.constraint)
        elif isinstance(step, Transfer):
            self.core |= set(step.constraints)
        elif isinstance(step, Deletion):
            self.derived -= set(step.derived)
        elif isinstance(step, OrderChange):
            self.order, self.zvars = step.order, step.zvars

    def extend(self, axiom: Extension) -> None:
        for s in extension_redundance(self.core | self.derived, axiom, self.order, self.zvars):
            self.emit(s)

    def reset(self, conclusions: Iterable[PbConstraint]) -> None:
        new = tuple(c for c in dict.fromkeys(conclusions) if c not in self.core)
        self.emit(Transfer(new))
        self.emit(Deletion(tuple(sorted(self.derived, key=_pb_key))))


def _pb_key(c: PbConstraint):
    return (len(c.terms), c.terms, c.bound)


def _implied(t: _Tracker, target: PbConstraint, build: Callable[[CpBuilder], int]) -> None:
    if t.has(target):
        return
    b = CpBuilder()
    if target.is_trivial():
        b.tautology(target)
    else:
        build(b)
    t.emit(ImplDeriv(target, b.derivation([target])))


def _er_into(t: _Tracker, pi: ErDerivation) -> None:
    produced = derived_clauses(pi)
    k = 0
    for s in pi.steps:
        if isinstance(s, EXTENSIONS):
            t.extend(s)
            k += len(axiom_clauses(s))
            continue
        target = clause_to_pb(produced[k])
        if isinstance(s, Resolve):
            pa, pb = clause_to_pb(produced[s.a]), clause_to_pb(produced[s.b])

            def build(b, pa=pa, pb=pb, result=produced[k]):
                ia = b.hyp(b.add_hypothesis(pa))
                ib = ia if pb == pa else b.hyp(b.add_hypothesis(pb))
                return resolvent_cp(b, ia, ib, result)

            _implied(t, target, build)
        elif isinstance(s, Weaken):
            src = clause_to_pb(produced[s.a])
            _implied(t, target, lambda b, src=src: b.weaken_to(b.hyp(b.add_hypothesis(src)), target))
        k += 1


def translate_er_rule(t: _Tracker, pi: ErDerivation) -> None:
    """Emit the steps for one ER rule into ``t``."""
    missing = [c for c in cnf_to_pb(pi.premises) if c not in t.core]
    if missing:
        raise ValueError(f"premise {missing[0]} is not a core constraint")
    _er_into(t, pi)
    t.reset(cnf_to_pb(pi.conclusions))


def combined_derivation(running: Sequence[frozenset], step: DomRule, fresh: FreshVars) -> ErDerivation:
    """``Γ ∧ Δ ∧ ¬C ⊢ Γ↾ω ∧ [x̄↾ω <lex x̄]`` with extension steps inside."""
    strict = strictify(step.pi_b, step.gadget)
    ren = {y: fresh() for y in step.pi_a.extension_vars()}
    pa = step.pi_a.rename(ren) if ren else step.pi_a
    base = premises_a(running, step)
    protected = set(step.x_order) | set(step.block.defined)
    b = ResolutionBuilder(base, protected)
    for s in pa.steps:
        replay(b, s)
    remap: list[int] = []
    for s in strict.steps:
        if isinstance(s, Premise):
            remap.append(b.use(strict.premises[s.index]))
        elif isinstance(s, EXTENSIONS):
            remap.extend(b.extend(s))
        else:
            remap.append(replay(b, s, remap))
    conclusions = image_clauses(running, step.omega) + list(strict.conclusions)
    return b.derivation(conclusions)


def _strict_gadget(step: DomRule):
    g = step.gadget
    return gen_lex(g.r, strict=True, msb_first=True, x=g.y, y=g.x, aux=list(g.aux[: g.adder_size]))


def translate_dom_rule(t: _Tracker, running: Sequence[frozenset], step: DomRule, fresh: FreshVars) -> None:
    """Emit the steps deriving ``C*`` for one dominance rule into ``t``."""
    if t.derived or t.order != TOP:
        raise ValueError("a dominance rule must start from an empty derived set and the trivial order")
    xs = step.x_order
    omega = step.omega
    image = step.image
    order = Linear(lex_weights(len(xs)))
    t.emit(OrderChange(order, xs))

    pi = combined_derivation(running, step, fresh)
    flat, hoisted = hoist_extensions(pi)
    for ax in tuple(step.block.axioms) + tuple(hoisted.axioms):
        t.extend(ax)

    c_pb = clause_to_pb(step.clause)
    neg = c_pb.negate()
    b = CpBuilder()
    units = negclause_into(b, b.hyp(b.add_hypothesis(neg)), sorted(step.clause, key=lambda l: (var(l), l < 0)))
    hyp_at: dict[PbConstraint, int] = {}

    def premise_step(cl: frozenset) -> int:
        p = clause_to_pb(cl)
        if t.has(p):
            if p not in hyp_at:
                hyp_at[p] = b.hyp(b.add_hypothesis(p))
            return hyp_at[p]
        (lit,) = cl
        return units[-lit]

    at = res_to_cp_into(b, flat, premise_step)
    where: dict[frozenset, int] = {}
    for cl, i in zip(derived_clauses(flat), at):
        where.setdefault(cl, i)

    goals: list[PbConstraint] = []
    available = t.core | t.derived | {neg}
    for d in running:
        g = clause_to_pb(d).substitute(omega)
        if g in available or g in goals:
            continue
        goals.append(g)
        img = sub_clause(omega, d)
        if is_tautologous(img) or g.is_trivial():
            b.tautology(g)
        else:
            b.weaken_to(where[img], g)

    lt = derive_L_into(b, _strict_gadget(step), lambda cl: where[cl])
    (le,) = order.instantiate(image, xs)
    le_step = b.add(lt, 1, b.slack(1), 1)
    assert b[le_step] == le
    goals.append(le)
    proof = b.derivation(goals)

    (ge,) = order.instantiate(xs, image)
    bottom = b.add(lt, 1, b.hyp(b.add_hypothesis(ge)), 1)
    assert b[bottom] == PbConstraint((), 1)
    refutation = b.derivation([b[bottom]])

    t.emit(Dominance(c_pb, omega, proof, refutation))
    t.reset([c_pb])
    t.emit(OrderChange(TOP, ()))


def erpls_to_lindom(p: ErplsProof, seed: int = 0) -> DomProof:
    """Linear-dominance refutation of ``Γ*`` from an accepted ER-PLS refutation.

    ``seed`` offsets the fresh-variable counter shared by the whole compile.
    """
    check_erpls(p)
    everything: set[int] = set(cnf_vars(p.initial))
    for s in p.steps:
        if isinstance(s, ErRule):
            everything |= s.pi.all_vars()
        else:
            everything |= s.block.base | set(s.block.defined) | set(s.aux)
            everything |= s.pi_a.all_vars() | s.pi_b.all_vars()
    fresh = FreshVars(max(everything, default=0) + 1 + seed)

    formula = cnf_to_pb(p.initial)
    t = _Tracker(formula)
    running = p.initial
    for s in p.steps:
        if isinstance(s, ErRule):
            translate_er_rule(t, s.pi)
            running = extend_cnf(running, s.pi.conclusions)
        else:
            translate_dom_rule(t, running, s, fresh)
            running = extend_cnf(running, [s.clause])
    return DomProof(tuple(formula), tuple(t.steps), "linear")
