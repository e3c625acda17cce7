"""Cutting planes: derivations, a checker, and builders.

The hypotheses of a derivation count as derived, so a goal may simply be a
hypothesis.  Steps refer to earlier *steps* by index; hypotheses enter the
step list only through ``Hyp``.  Every constraint is kept in the normal
form of :class:`~domproof.core.PbConstraint`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

from .core import (
    ONE,
    ZERO,
    PbConstraint,
    Substitution,
    clause_to_pb,
    cnf_to_pb,
    is_const,
    is_tautologous,
    var,
)
from .er import EXTENSIONS, DropZero, ErDerivation, Premise, Resolve, Weaken, derived_clauses
from .errors import ProofRejected


@dataclass(frozen=True)
class Hyp:
    index: int


@dataclass(frozen=True)
class AxGe:
    """``x ≥ 0``."""

    var: int


@dataclass(frozen=True)
class AxLe:
    """``x ≤ 1``, stored as ``−x ≥ −1``."""

    var: int


@dataclass(frozen=True)
class Add:
    a: int
    ma: int
    b: int
    mb: int


@dataclass(frozen=True)
class Div:
    a: int
    d: int


CpStep = Union[Hyp, AxGe, AxLe, Add, Div]


@dataclass(frozen=True)
class CpDerivation:
    hypotheses: tuple[PbConstraint, ...]
    steps: tuple[CpStep, ...]
    goals: tuple[PbConstraint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "hypotheses", tuple(self.hypotheses))
        object.__setattr__(self, "steps", tuple(self.steps))
        object.__setattr__(self, "goals", tuple(self.goals))

    def __len__(self) -> int:
        return len(self.steps)


def divide(c: PbConstraint, d: int) -> PbConstraint:
    if any(coef % d for _, coef in c.terms):
        raise ValueError(f"coefficients of {c} are not divisible by {d}")
    return PbConstraint(tuple((v, coef // d) for v, coef in c.terms), -((-c.bound) // d))


def run_steps(
    hypotheses: Sequence[PbConstraint], steps: Iterable[CpStep], offset: int = 0
) -> list[PbConstraint]:
    """Derive the constraint of every step, raising :class:`ProofRejected`."""
    out: list[PbConstraint] = []

    def get(i: int, k: int) -> PbConstraint:
        if not 0 <= i < len(out):
            raise ProofRejected(f"step {i} is not an earlier step", k + offset)
        return out[i]

    for k, s in enumerate(steps):
        if isinstance(s, Hyp):
            if not 0 <= s.index < len(hypotheses):
                raise ProofRejected(f"no hypothesis {s.index}", k + offset, "hyp")
            out.append(hypotheses[s.index])
        elif isinstance(s, AxGe):
            if s.var <= 0 or is_const(s.var):
                raise ProofRejected(f"bad variable {s.var}", k + offset, "axiom")
            out.append(PbConstraint(((s.var, 1),), 0))
        elif isinstance(s, AxLe):
            if s.var <= 0 or is_const(s.var):
                raise ProofRejected(f"bad variable {s.var}", k + offset, "axiom")
            out.append(PbConstraint(((s.var, -1),), -1))
        elif isinstance(s, Add):
            if s.ma < 0 or s.mb < 0:
                raise ProofRejected("multipliers must be nonnegative", k + offset, "add")
            a, b = get(s.a, k), get(s.b, k)
            out.append(a.scaled(s.ma).plus(b.scaled(s.mb)))
        elif isinstance(s, Div):
            if s.d <= 0:
                raise ProofRejected("divisor must be positive", k + offset, "div")
            a = get(s.a, k)
            try:
                out.append(divide(a, s.d))
            except ValueError as e:
                raise ProofRejected(str(e), k + offset, "div") from None
        else:
            raise ProofRejected(f"unknown step {s!r}", k + offset)
    return out


def check_cp(pi: CpDerivation) -> list[PbConstraint]:
    """Verify ``pi``; return the constraint derived at every step."""
    out = run_steps(pi.hypotheses, pi.steps)
    have = set(pi.hypotheses) | set(out)
    for g in pi.goals:
        if g not in have:
            raise ProofRejected(f"goal {g} is never derived")
    return out


def is_valid_cp(pi: CpDerivation) -> bool:
    try:
        check_cp(pi)
    except ProofRejected:
        return False
    return True


class CpBuilder:
    """Emit CP steps while tracking the derived constraints."""

    def __init__(self, hypotheses: Iterable[PbConstraint] = ()):
        self.hypotheses: list[PbConstraint] = list(hypotheses)
        self.steps: list[CpStep] = []
        self.derived: list[PbConstraint] = []
        self._hyp_step: dict[int, int] = {}
        self._cache: dict = {}

    def __len__(self) -> int:
        return len(self.steps)

    def __getitem__(self, i: int) -> PbConstraint:
        return self.derived[i]

    def _push(self, step: CpStep, result: PbConstraint) -> int:
        self.steps.append(step)
        self.derived.append(result)
        return len(self.steps) - 1

    def add_hypothesis(self, c: PbConstraint) -> int:
        self.hypotheses.append(c)
        return len(self.hypotheses) - 1

    def hyp(self, i: int) -> int:
        if i not in self._hyp_step:
            self._hyp_step[i] = self._push(Hyp(i), self.hypotheses[i])
        return self._hyp_step[i]

    def hyp_of(self, c: PbConstraint) -> int:
        return self.hyp(self.hypotheses.index(c))

    def axge(self, v: int) -> int:
        key = ("ge", v)
        if key not in self._cache:
            self._cache[key] = self._push(AxGe(v), PbConstraint(((v, 1),), 0))
        return self._cache[key]

    def axle(self, v: int) -> int:
        key = ("le", v)
        if key not in self._cache:
            self._cache[key] = self._push(AxLe(v), PbConstraint(((v, -1),), -1))
        return self._cache[key]

    def lit_axiom(self, lit: int) -> int:
        """``ℓ ≥ 0`` for a literal ℓ."""
        return self.axge(lit) if lit > 0 else self.axle(-lit)

    def add(self, a: int, ma: int, b: int, mb: int) -> int:
        return self._push(Add(a, ma, b, mb), self.derived[a].scaled(ma).plus(self.derived[b].scaled(mb)))

    def scale(self, a: int, k: int) -> int:
        if k == 1:
            return a
        return self.add(a, k, a, 0)

    def div(self, a: int, d: int) -> int:
        if d == 1:
            return a
        return self._push(Div(a, d), divide(self.derived[a], d))

    def combine(self, parts: Sequence[tuple[int, int]]) -> int:
        """Sum of ``mult · step`` over ``parts`` by chained additions."""
        parts = [(i, m) for i, m in parts if m]
        if not parts:
            return self.trivial(0)
        acc = self.scale(*parts[0])
        for i, m in parts[1:]:
            acc = self.add(acc, 1, i, m)
        return acc

    def slack(self, k: int, v: int = 1) -> int:
        """``0 ≥ −k`` for ``k ≥ 1``."""
        key = ("slack", v)
        if key not in self._cache:
            self._cache[key] = self.add(self.axge(v), 1, self.axle(v), 1)
        return self.scale(self._cache[key], k)

    def trivial(self, bound: int, v: int = 1) -> int:
        """``0 ≥ bound`` for ``bound ≤ 0``."""
        if bound < 0:
            return self.slack(-bound, v)
        if bound > 0:
            raise ValueError("0 ≥ b with b > 0 is not trivial")
        key = ("zero", v)
        if key not in self._cache:
            self._cache[key] = self.div(self.slack(1, v), 2)
        return self._cache[key]

    def weaken_to(self, a: int, target: PbConstraint) -> int:
        """Derive ``target`` from step ``a`` by adding Boolean axioms.

        Works per variable: raising a coefficient adds ``x ≥ 0`` and lowering
        one adds ``−x ≥ −1``; leftover bound is dropped with ``0 ≥ −k``.
        """
        src = self.derived[a]
        if src == target:
            return a
        have = src.coefs
        want = target.coefs
        parts = [(a, 1)]
        bound = src.bound
        for v in sorted(set(have) | set(want)):
            d = want.get(v, 0) - have.get(v, 0)
            if d > 0:
                parts.append((self.axge(v), d))
            elif d < 0:
                parts.append((self.axle(v), -d))
                bound += d
        if bound < target.bound:
            raise ValueError(f"{target} does not follow from {src} by weakening")
        if bound > target.bound:
            anchor = next(iter(want or have), 1)
            parts.append((self.slack(1, anchor), bound - target.bound))
        out = self.combine(parts)
        assert self.derived[out] == target, (self.derived[out], target)
        return out

    def lit_weaken(self, a: int, lits: Iterable[int]) -> int:
        """Add ``ℓ ≥ 0`` for each literal (constants ignored)."""
        parts = [(a, 1)] + [(self.lit_axiom(l), 1) for l in lits if not is_const(l)]
        return self.combine(parts)

    def add_lit_axioms(self, a: int, pairs: Iterable[tuple[int, int]]) -> int:
        """Add ``k · (ℓ ≥ 0)`` for each ``(ℓ, k)``."""
        return self.combine([(a, 1)] + [(self.lit_axiom(l), k) for l, k in pairs if k and not is_const(l)])

    def tautology(self, target: PbConstraint) -> int:
        """Derive a constraint that holds under every 0/1 assignment."""
        if not target.is_trivial():
            raise ValueError(f"{target} is not trivially true")
        return self.weaken_to(self.trivial(target.bound - target.min_lhs()), target)

    def derivation(self, goals: Iterable[PbConstraint] = ()) -> CpDerivation:
        return CpDerivation(tuple(self.hypotheses), tuple(self.steps), tuple(goals))


# --- resolution to cutting planes -----------------------------------------


def resolvent_cp(b: CpBuilder, ia: int, ib: int, result: Iterable[int]) -> int:
    """``(A∨x)* + (B∨¬x)*``, weakened to ``2·C* − 1``, halved to ``C*``."""
    target = clause_to_pb(result)
    summed = b.add(ia, 1, ib, 1)
    doubled = PbConstraint(tuple((v, 2 * c) for v, c in target.terms), 2 * target.bound - 1)
    return b.div(b.weaken_to(summed, doubled), 2)


def res_to_cp_into(b: CpBuilder, pi: ErDerivation, premise_step: Callable[[frozenset], int]) -> list[int]:
    """Replay a resolution-only derivation inside ``b``.

    ``premise_step(clause)`` must return a step index holding ``clause*``.
    Returns the step index of ``C*`` for every produced clause C.
    """
    out: list[int] = []
    produced = derived_clauses(pi)
    for k, s in enumerate(pi.steps):
        if isinstance(s, EXTENSIONS):
            raise ValueError(f"step {k}: extension steps cannot be replayed in cutting planes")
        if isinstance(s, Premise):
            out.append(premise_step(pi.premises[s.index]))
        elif isinstance(s, Resolve):
            out.append(resolvent_cp(b, out[s.a], out[s.b], s.result))
        elif isinstance(s, Weaken):
            out.append(b.weaken_to(out[s.a], clause_to_pb(s.result)))
        elif isinstance(s, DropZero):
            out.append(out[s.a])  # same normal form
        assert b[out[-1]] == clause_to_pb(produced[len(out) - 1])
    return out


def res_to_cp(pi: ErDerivation) -> CpDerivation:
    """Cutting-planes simulation of a resolution-only ER derivation."""
    hyps = cnf_to_pb(pi.premises)
    b = CpBuilder(hyps)
    res_to_cp_into(b, pi, lambda c: b.hyp_of(clause_to_pb(c)))
    return b.derivation(clause_to_pb(c) for c in pi.conclusions)


def unit_goals(c: Iterable[int]) -> list[PbConstraint]:
    """``(¬C)*``: one unit constraint per literal of C."""
    return cnf_to_pb([frozenset([-l]) for l in c])


def negclause_into(b: CpBuilder, neg_step: int, c: Sequence[int]) -> dict[int, int]:
    """From ``¬(C*)`` at ``neg_step`` derive ``(¬ℓ)*`` for each ℓ in C.

    With prefix sums ``A_k = ¬(C*) + Σ_{j<k} ℓ_j ≥ 0`` and suffix sums
    ``P_k = Σ_{j>k} ℓ_j ≥ 0`` each unit is ``A_k + P_k``; O(|C|) steps.
    """
    lits = sorted((l for l in c if not is_const(l)), key=lambda l: (var(l), l < 0))
    out: dict[int, int] = {}
    n = len(lits)
    if not n:
        return out
    prefix = [neg_step]
    for l in lits[:-1]:
        prefix.append(b.add(prefix[-1], 1, b.lit_axiom(l), 1))
    suffix: list[int | None] = [None] * n
    for k in range(n - 2, -1, -1):
        ax = b.lit_axiom(lits[k + 1])
        suffix[k] = ax if suffix[k + 1] is None else b.add(suffix[k + 1], 1, ax, 1)
    for k, l in enumerate(lits):
        got = prefix[k] if suffix[k] is None else b.add(prefix[k], 1, suffix[k], 1)
        out[l] = b.weaken_to(got, clause_to_pb([-l]))
    return out


def negclause_bridge(c: Iterable[int]) -> CpDerivation:
    c = frozenset(c)
    if is_tautologous(c):
        raise ValueError("clause is tautologous")
    hyp = clause_to_pb(c).negate()
    b = CpBuilder([hyp])
    units = negclause_into(b, b.hyp(0), sorted(c - {ZERO}))
    goals = unit_goals(c - {ZERO})
    for g in unit_goals(c & {ZERO}):
        b.weaken_to(b.trivial(0), g)
        goals.append(g)
    assert len(units) == len(c - {ZERO})
    return b.derivation(goals)


# --- substitution instances -----------------------------------------------


def instantiate_into(
    b: CpBuilder,
    steps: Sequence[CpStep],
    sigma: Substitution,
    hyp_step: Callable[[int], int],
) -> list[int]:
    """Replay ``steps`` under the substitution ``sigma``.

    A CP derivation stays valid under any substitution: Boolean axioms map
    to literal axioms or trivial constraints, sums commute with it, and
    divisibility survives because each coefficient moved into the bound is
    a multiple of the divisor.  ``hyp_step(i)`` gives the step holding the
    image of hypothesis ``i``.
    """
    out: list[int] = []
    for s in steps:
        if isinstance(s, Hyp):
            out.append(hyp_step(s.index))
        elif isinstance(s, (AxGe, AxLe)):
            lit = sigma(s.var) if isinstance(s, AxGe) else -sigma(s.var)
            # the axiom says lit ≥ 0
            if lit == ZERO:
                out.append(b.trivial(0))
            elif lit == ONE:
                out.append(b.trivial(-1))
            else:
                out.append(b.lit_axiom(lit))
        elif isinstance(s, Add):
            out.append(b.add(out[s.a], s.ma, out[s.b], s.mb))
        else:
            out.append(b.div(out[s.a], s.d))
    return out
