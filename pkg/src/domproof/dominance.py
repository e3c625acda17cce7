"""The dominance proof system and its linear and weak-linear restrictions.

A proof is a list of steps applied to a configuration ``(core, derived,
order, z̄)``.  Steps carry only the change they make plus the witnesses
their rule asks for, so the configuration after every step is recomputed
deterministically by :func:`apply_step`.

Witness convention: a CP witness may cite any constraint the rule makes
available as a hypothesis, and a required constraint counts as proven when
it is available or derived by the witness.  Nothing is exempt for being
trivially true; such constraints have to be derived like any other.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Sequence, Union

from .core import PbConstraint, Substitution
from .cp import CpDerivation, run_steps
from .errors import ProofRejected

MODES = ("full", "linear", "weak")


# --- orders ---------------------------------------------------------------


@dataclass(frozen=True)
class Linear:
    """``f(x̄) ≤ f(ȳ)`` with ``f = Σ b_i x_i``; the empty tuple is ⊤."""

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(b) for b in self.coefficients))

    @property
    def arity(self) -> int:
        return len(self.coefficients)

    def instantiate(self, lhs: Sequence[int], rhs: Sequence[int]) -> tuple[PbConstraint, ...]:
        return linear_order_formula(self, lhs, rhs)

    def linear_coefficients(self) -> tuple[int, ...]:
        return self.coefficients

    def holds(self, alpha: Sequence[int], beta: Sequence[int]) -> bool:
        f = lambda bits: sum(b * a for b, a in zip(self.coefficients, bits))
        return f(alpha) <= f(beta)


TOP = Linear(())


@dataclass(frozen=True)
class General:
    """An order given by a PB formula over dummy variables.

    ``formula`` speaks about ``x_i = i`` and ``y_i = n + i`` for ``i = 1..n``.
    ``refl`` must derive ``O(ū, ū)`` from nothing and ``trans`` must derive
    ``O(ū, w̄)`` from ``O(ū, v̄) ∪ O(v̄, w̄)``, with ``ū = 1..n``,
    ``v̄ = n+1..2n`` and ``w̄ = 2n+1..3n``.
    """

    formula: tuple[PbConstraint, ...]
    arity: int
    refl: CpDerivation | None = None
    trans: CpDerivation | None = None

    def __post_init__(self):
        object.__setattr__(self, "formula", tuple(self.formula))
        n = self.arity
        for c in self.formula:
            if any(not 1 <= v <= 2 * n for v in c.vars()):
                raise ValueError(f"order constraint {c} uses a variable outside 1..{2 * n}")

    def instantiate(self, lhs: Sequence[int], rhs: Sequence[int]) -> tuple[PbConstraint, ...]:
        n = self.arity
        if len(lhs) != n or len(rhs) != n:
            raise ValueError(f"order has arity {n}, got {len(lhs)} and {len(rhs)}")
        sigma = Substitution({**{i + 1: l for i, l in enumerate(lhs)}, **{n + i + 1: r for i, r in enumerate(rhs)}})
        return tuple(c.substitute(sigma) for c in self.formula)

    def linear_coefficients(self) -> None:
        return None

    def holds(self, alpha: Sequence[int], beta: Sequence[int]) -> bool:
        values = {i + 1: a for i, a in enumerate(alpha)}
        values.update({self.arity + i + 1: b for i, b in enumerate(beta)})
        return all(c.evaluate(values) for c in self.formula)


OrderSpec = Union[Linear, General]


def linear_order_formula(spec: Linear, lhs: Sequence[int], rhs: Sequence[int]) -> tuple[PbConstraint, ...]:
    """``Σ b_i·lhs_i ≤ Σ b_i·rhs_i`` as one normalized constraint.

    The empty order ⊤ gives the empty formula.
    """
    b = spec.coefficients
    if len(lhs) != len(b) or len(rhs) != len(b):
        raise ValueError(f"order has arity {len(b)}, got {len(lhs)} and {len(rhs)}")
    if not b:
        return ()
    terms = [(bi, r) for bi, r in zip(b, rhs)] + [(-bi, l) for bi, l in zip(b, lhs)]
    return (PbConstraint.geq(terms, 0),)


# --- configurations and steps ---------------------------------------------


@dataclass(frozen=True)
class Configuration:
    core: frozenset[PbConstraint]
    derived: frozenset[PbConstraint] = frozenset()
    order: OrderSpec = TOP
    zvars: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "core", frozenset(self.core))
        object.__setattr__(self, "derived", frozenset(self.derived))
        object.__setattr__(self, "zvars", tuple(self.zvars))
        if self.order.arity != len(self.zvars):
            raise ValueError(f"order arity {self.order.arity} does not match {len(self.zvars)} order variables")

    @classmethod
    def initial(cls, formula: Iterable[PbConstraint]) -> "Configuration":
        return cls(frozenset(formula))

    def order_formula(self, lhs: Sequence[int], rhs: Sequence[int]) -> tuple[PbConstraint, ...]:
        return self.order.instantiate(lhs, rhs)

    def is_refuted(self) -> bool:
        return any(c.is_contradiction() for c in self.core | self.derived)


@dataclass(frozen=True)
class ImplDeriv:
    constraint: PbConstraint
    proof: CpDerivation


@dataclass(frozen=True)
class Redundance:
    constraint: PbConstraint
    omega: Substitution
    proof: CpDerivation


@dataclass(frozen=True)
class Deletion:
    """Drop ``derived`` from D and, with a redundance witness, one core constraint."""

    derived: tuple[PbConstraint, ...] = ()
    core: PbConstraint | None = None
    omega: Substitution | None = None
    proof: CpDerivation | None = None

    def __post_init__(self):
        object.__setattr__(self, "derived", tuple(self.derived))


@dataclass(frozen=True)
class Transfer:
    constraints: tuple[PbConstraint, ...]

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))


@dataclass(frozen=True)
class Dominance:
    constraint: PbConstraint
    omega: Substitution
    proof: CpDerivation  # ⊢ core↾ω ∪ O(z̄↾ω, z̄)
    refutation: CpDerivation  # with O(z̄, z̄↾ω) ⊢ ⊥


@dataclass(frozen=True)
class OrderChange:
    order: OrderSpec
    zvars: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "zvars", tuple(self.zvars))


DomStep = Union[ImplDeriv, Redundance, Deletion, Transfer, Dominance, OrderChange]

RULE_NAMES = {
    ImplDeriv: "implicational",
    Redundance: "redundance",
    Deletion: "deletion",
    Transfer: "transfer",
    Dominance: "dominance",
    OrderChange: "order-change",
}


@dataclass(frozen=True)
class DomProof:
    formula: tuple[PbConstraint, ...]
    steps: tuple[DomStep, ...]
    mode: str = "linear"

    def __post_init__(self):
        object.__setattr__(self, "formula", tuple(self.formula))
        object.__setattr__(self, "steps", tuple(self.steps))
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")

    def __len__(self) -> int:
        return len(self.steps)

    def size(self) -> int:
        """Dominance steps plus every CP step inside their witnesses."""
        return len(self.steps) + sum(len(pi) for s in self.steps for pi in witnesses(s))


def witnesses(step: DomStep) -> list[CpDerivation]:
    if isinstance(step, (ImplDeriv, Redundance)):
        return [step.proof]
    if isinstance(step, Deletion):
        return [step.proof] if step.proof is not None else []
    if isinstance(step, Dominance):
        return [step.proof, step.refutation]
    if isinstance(step, OrderChange) and isinstance(step.order, General):
        return [pi for pi in (step.order.refl, step.order.trans) if pi is not None]
    return []


# --- checking -------------------------------------------------------------


def check_witness(
    pi: CpDerivation, available: Iterable[PbConstraint], required: Iterable[PbConstraint], what: str
) -> None:
    """``available ⊢CP required`` as witnessed by ``pi``."""
    available = set(available)
    stray = [h for h in pi.hypotheses if h not in available]
    if stray:
        raise ProofRejected(f"{what}: hypothesis {stray[0]} is not available")
    try:
        out = run_steps(pi.hypotheses, pi.steps)
    except ProofRejected as e:
        raise ProofRejected(f"{what}: {e}") from None
    have = available | set(out)
    for g in required:
        if g not in have:
            raise ProofRejected(f"{what}: {g} is not derived")


def _image(cfg: Configuration, omega: Substitution) -> tuple[int, ...]:
    return tuple(omega(z) for z in cfg.zvars)


def _redundance_check(
    cfg: Configuration, base: frozenset, c: PbConstraint, omega: Substitution, pi: CpDerivation, what: str
) -> None:
    required = [d.substitute(omega) for d in base | {c}]
    required += cfg.order_formula(_image(cfg, omega), cfg.zvars)
    check_witness(pi, base | {c.negate()}, required, what)


def _check_order_proofs(order: General) -> None:
    n = order.arity
    u = list(range(1, n + 1))
    v = list(range(n + 1, 2 * n + 1))
    w = list(range(2 * n + 1, 3 * n + 1))
    if order.refl is None or order.trans is None:
        raise ProofRejected("a general order needs reflexivity and transitivity proofs")
    check_witness(order.refl, (), order.instantiate(u, u), "reflexivity")
    check_witness(order.trans, order.instantiate(u, v) + order.instantiate(v, w), order.instantiate(u, w), "transitivity")


def apply_step(cfg: Configuration, step: DomStep, mode: str = "linear") -> Configuration:
    """The configuration after ``step``; raises :class:`ProofRejected`."""
    both = cfg.core | cfg.derived
    if isinstance(step, ImplDeriv):
        check_witness(step.proof, both, [step.constraint], "derivation")
        return replace(cfg, derived=cfg.derived | {step.constraint})

    if isinstance(step, Redundance):
        _redundance_check(cfg, both, step.constraint, step.omega, step.proof, "redundance witness")
        return replace(cfg, derived=cfg.derived | {step.constraint})

    if isinstance(step, Deletion):
        missing = [c for c in step.derived if c not in cfg.derived]
        if missing:
            raise ProofRejected(f"{missing[0]} is not a derived constraint")
        core = cfg.core
        if step.core is not None:
            if step.core not in cfg.core:
                raise ProofRejected(f"{step.core} is not a core constraint")
            if step.omega is None or step.proof is None:
                raise ProofRejected("deleting a core constraint needs a redundance witness")
            core = cfg.core - {step.core}
            _redundance_check(cfg, core, step.core, step.omega, step.proof, "deletion witness")
        return replace(cfg, core=core, derived=cfg.derived - set(step.derived))

    if isinstance(step, Transfer):
        missing = [c for c in step.constraints if c not in both]
        if missing:
            raise ProofRejected(f"{missing[0]} is neither core nor derived")
        return replace(cfg, core=cfg.core | set(step.constraints))

    if isinstance(step, Dominance):
        if mode == "weak" and cfg.derived:
            raise ProofRejected(f"weak dominance needs an empty derived set, found {len(cfg.derived)}")
        neg = step.constraint.negate()
        image = _image(cfg, step.omega)
        required = [d.substitute(step.omega) for d in cfg.core]
        required += cfg.order_formula(image, cfg.zvars)
        check_witness(step.proof, both | {neg}, required, "dominance witness")
        check_witness(
            step.refutation,
            both | {neg} | set(cfg.order_formula(cfg.zvars, image)),
            [PbConstraint((), 1)],
            "strictness witness",
        )
        if mode == "weak":
            return replace(cfg, core=cfg.core | {step.constraint})
        return replace(cfg, derived=cfg.derived | {step.constraint})

    if isinstance(step, OrderChange):
        if cfg.derived:
            raise ProofRejected("the order may only change while the derived set is empty")
        if step.order.arity != len(step.zvars):
            raise ProofRejected("order arity does not match its variables")
        if isinstance(step.order, General):
            if mode != "full":
                raise ProofRejected(f"{mode} mode only admits linear orders")
            _check_order_proofs(step.order)
        return replace(cfg, order=step.order, zvars=step.zvars)

    raise ProofRejected(f"unknown step {step!r}")


def run_dom(p: DomProof, start: Configuration | None = None) -> Configuration:
    """Apply every step of ``p`` and return the final configuration."""
    cfg = start if start is not None else Configuration.initial(p.formula)
    for k, step in enumerate(p.steps):
        try:
            cfg = apply_step(cfg, step, p.mode)
        except ProofRejected as e:
            raise ProofRejected(e.reason, k, RULE_NAMES.get(type(step))) from None
    return cfg


def check_dom(p: DomProof) -> Configuration:
    """Check a refutation; returns the final configuration."""
    cfg = run_dom(p)
    if not cfg.is_refuted():
        raise ProofRejected("the final configuration does not contain 0 >= 1")
    return cfg


def is_valid_dom(p: DomProof) -> bool:
    try:
        check_dom(p)
    except ProofRejected:
        return False
    return True
