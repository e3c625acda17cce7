"""ER-PLS: extended resolution plus a lexicographic dominance rule.

The running CNF is an ordered clause list that only grows.  Each rule's
ER derivations must list their premises in a fixed order, which
:func:`premises_a` and :func:`premises_b` produce:

* the running CNF,
* then the clauses of ``Δ``,
* then one unit ``¬ℓ`` per literal of ``C`` (sorted),
* and, for the second derivation, the clauses of the gadget
  ``[x̄ ≤lex x̄↾ω]``.

Every variable of the running CNF, ``Δ`` and ``C`` is protected, so the
derivations cannot redefine any of them by extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .core import (
    Substitution,
    check_literal,
    clause_vars,
    cnf_vars,
    format_clause,
    is_const,
    is_tautologous,
    sorted_clause,
    sub_clause,
    var,
)
from .er import ErDerivation, ExtensionBlock, check_er
from .errors import ProofRejected
from .ordering import LexGadget, gen_lex, lex_aux_count
from . import oracle


@dataclass(frozen=True)
class ErRule:
    pi: ErDerivation


@dataclass(frozen=True)
class DomRule:
    """Add ``clause`` with extensions ``block``, witness ``omega`` and two derivations.

    ``aux`` lists the auxiliary variables of the gadget
    ``[x̄ ≤lex x̄↾ω]`` in construction order.
    """

    clause: frozenset
    x_order: tuple[int, ...]
    block: ExtensionBlock
    omega: Substitution
    pi_a: ErDerivation
    pi_b: ErDerivation
    aux: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "clause", frozenset(self.clause))
        object.__setattr__(self, "x_order", tuple(self.x_order))
        object.__setattr__(self, "aux", tuple(self.aux))

    @property
    def image(self) -> tuple[int, ...]:
        """``x̄↾ω`` in the order of ``x_order``."""
        return tuple(self.omega(v) for v in self.x_order)

    @property
    def gadget(self) -> LexGadget:
        return gen_lex(len(self.x_order), strict=False, msb_first=True, x=self.x_order, y=self.image, aux=self.aux)

    def negated_units(self) -> list[frozenset]:
        return [frozenset([-l]) for l in sorted_clause(self.clause)]


ErplsStep = Union[ErRule, DomRule]


@dataclass(frozen=True)
class ErplsProof:
    initial: tuple[frozenset, ...]
    steps: tuple[ErplsStep, ...]

    def __post_init__(self):
        object.__setattr__(self, "initial", _dedup(self.initial))
        object.__setattr__(self, "steps", tuple(self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def size(self) -> int:
        """Literal occurrences over the input, every derivation and every witness."""
        total = sum(len(c) for c in self.initial)
        for s in self.steps:
            if isinstance(s, ErRule):
                total += s.pi.size()
            else:
                total += len(s.clause) + len(s.x_order) + len(s.omega) + len(s.aux)
                total += sum(len(c) for c in s.block.clauses())
                total += s.pi_a.size() + s.pi_b.size()
        return total


def _dedup(clauses: Iterable[Iterable[int]]) -> tuple[frozenset, ...]:
    out: list[frozenset] = []
    seen: set[frozenset] = set()
    for c in clauses:
        c = frozenset(c)
        if c not in seen:
            seen.add(c)
            out.append(c)
    return tuple(out)


def extend_cnf(running: Sequence[frozenset], new: Iterable[frozenset]) -> tuple[frozenset, ...]:
    return _dedup(list(running) + list(new))


def premises_a(running: Sequence[frozenset], step: DomRule) -> tuple[frozenset, ...]:
    return tuple(running) + tuple(step.block.clauses()) + tuple(step.negated_units())


def premises_b(running: Sequence[frozenset], step: DomRule) -> tuple[frozenset, ...]:
    return premises_a(running, step) + tuple(step.gadget.cnf)


def image_clauses(running: Sequence[frozenset], omega: Substitution) -> list[frozenset]:
    """The clauses of ``Γ↾ω`` that still need proof (tautologies are dropped)."""
    out = []
    for c in running:
        d = sub_clause(omega, c)
        if not is_tautologous(d) and d not in out:
            out.append(d)
    return out


def _check_premises(pi: ErDerivation, expect: tuple, what: str) -> None:
    if tuple(pi.premises) != tuple(expect):
        raise ProofRejected(f"{what} does not list the expected premises")


def _check_nested(pi: ErDerivation, protected: set[int], what: str) -> list[frozenset]:
    checked = ErDerivation(pi.premises, pi.steps, pi.conclusions, pi.protected | protected)
    try:
        return check_er(checked)
    except ProofRejected as e:
        raise ProofRejected(f"{what}: {e}") from None


def check_dom_rule(running: Sequence[frozenset], step: DomRule) -> None:
    """Validate a dominance application against the running CNF."""
    xs = set(step.x_order)
    gamma_vars = cnf_vars(running)
    if len(xs) != len(step.x_order):
        raise ProofRejected("variable order lists a variable twice")
    if xs != gamma_vars:
        raise ProofRejected("variable order must list exactly the variables of the CNF")
    c = step.clause
    for l in c:
        check_literal(l)
    if any(is_const(l) for l in c) or not clause_vars(c) <= xs:
        raise ProofRejected(f"clause [{format_clause(c)}] must be over the CNF variables")
    if is_tautologous(c):
        raise ProofRejected("the new clause is tautologous")

    block = step.block
    try:
        block.validate()
    except ValueError as e:
        raise ProofRejected(f"extension block: {e}") from None
    if block.base != xs:
        raise ProofRejected("extension block must be over the CNF variables")
    ys = set(block.defined)

    for v, lit in step.omega.items():
        if v not in xs:
            raise ProofRejected(f"substitution moves x{v}, which is not a CNF variable")
        if not is_const(lit) and var(lit) not in xs | ys:
            raise ProofRejected(f"substitution maps x{v} outside the CNF and extension variables")

    n = len(step.x_order)
    aux = step.aux
    need = lex_aux_count(n, False)
    if len(aux) != need or len(set(aux)) != need:
        raise ProofRejected(f"gadget needs {need} distinct auxiliary variables")
    clash = set(aux) & (xs | ys)
    if clash:
        raise ProofRejected(f"gadget auxiliary x{min(clash)} already occurs in the CNF, extensions or clause")
    if any(v <= 0 or is_const(v) for v in aux):
        raise ProofRejected("gadget auxiliaries must be variables")

    protected = xs | ys
    _check_premises(step.pi_a, premises_a(running, step), "first derivation")
    produced = _check_nested(step.pi_a, protected, "first derivation")
    have = set(step.pi_a.premises) | set(produced)
    for d in image_clauses(running, step.omega):
        if d not in have:
            raise ProofRejected(f"first derivation never derives [{format_clause(d)}] of the substituted CNF")

    _check_premises(step.pi_b, premises_b(running, step), "second derivation")
    produced = _check_nested(step.pi_b, protected | set(aux), "second derivation")
    if frozenset() not in set(produced) | set(step.pi_b.premises):
        raise ProofRejected("second derivation does not reach the empty clause")


def apply_erpls_step(running: Sequence[frozenset], step: ErplsStep) -> tuple[frozenset, ...]:
    if isinstance(step, ErRule):
        _check_premises(step.pi, tuple(running), "derivation")
        check_er(step.pi)
        return extend_cnf(running, step.pi.conclusions)
    if isinstance(step, DomRule):
        check_dom_rule(running, step)
        return extend_cnf(running, [step.clause])
    raise ProofRejected(f"unknown step {step!r}")


def erpls_states(p: ErplsProof) -> list[tuple[frozenset, ...]]:
    """The running CNF before the first step and after every step."""
    states = [p.initial]
    for k, step in enumerate(p.steps):
        rule = "er" if isinstance(step, ErRule) else "dominance"
        try:
            states.append(apply_erpls_step(states[-1], step))
        except ProofRejected as e:
            raise ProofRejected(e.reason if e.step is None else str(e), k, rule) from None
    return states


def check_erpls(p: ErplsProof) -> tuple[frozenset, ...]:
    """Check a refutation; return the final CNF."""
    final = erpls_states(p)[-1]
    if frozenset() not in final:
        raise ProofRejected("the final CNF does not contain the empty clause")
    return final


def is_valid_erpls(p: ErplsProof) -> bool:
    try:
        check_erpls(p)
    except ProofRejected:
        return False
    return True


def step_equisat_test(p: ErplsProof, cap: int = oracle.DEFAULT_CAP) -> bool:
    """Whether consecutive CNFs of an accepted proof are equisatisfiable."""
    states = erpls_states(p)
    return all(oracle.equisatisfiable(a, b, cap) for a, b in zip(states, states[1:]))
