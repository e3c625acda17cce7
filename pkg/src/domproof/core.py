"""Literals, clauses, substitutions and pseudo-Boolean constraints.

Literals are plain ints: ``v`` is the variable ``x_v`` and ``-v`` its negation.
The constants are the sentinels :data:`ONE` and :data:`ZERO = -ONE`, so
negation is ``-lit`` for every literal including constants.

Clauses are ``frozenset``s of literals and a CNF is a ``frozenset`` of
clauses.  Proof objects that need positional references keep clauses in
tuples instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

CONST = 1 << 62
ONE = CONST
ZERO = -CONST

Clause = frozenset
Cnf = frozenset

BOTTOM: frozenset = frozenset()


def neg(lit: int) -> int:
    return -lit


def var(lit: int) -> int:
    return lit if lit > 0 else -lit


def is_const(lit: int) -> bool:
    return lit == ONE or lit == ZERO


def check_literal(lit: int) -> int:
    if lit == 0 or (var(lit) >= CONST and not is_const(lit)):
        raise ValueError(f"not a literal: {lit}")
    return lit


def lit_str(lit: int) -> str:
    if lit == ONE:
        return "t"
    if lit == ZERO:
        return "f"
    return str(lit)


def clause(*lits: int) -> frozenset:
    return frozenset(check_literal(l) for l in lits)


def cnf(clauses: Iterable[Iterable[int]]) -> frozenset:
    return frozenset(frozenset(c) for c in clauses)


def clause_vars(c: Iterable[int]) -> set[int]:
    return {var(l) for l in c if not is_const(l)}


def cnf_vars(clauses: Iterable[Iterable[int]]) -> set[int]:
    out: set[int] = set()
    for c in clauses:
        out.update(clause_vars(c))
    return out


def is_tautologous(c: Iterable[int]) -> bool:
    lits = set(c)
    if ONE in lits:
        return True
    return any(-l in lits for l in lits)


def negate_clause(c: Iterable[int]) -> frozenset:
    """The CNF of unit clauses ``{¬p}`` for each literal ``p`` of ``c``."""
    return frozenset(frozenset([-l]) for l in c)


def format_clause(c: Iterable[int]) -> str:
    lits = sorted(c, key=_lit_key)
    if not lits:
        return "⊥"
    return " ∨ ".join(_pretty(l) for l in lits)


def _pretty(lit: int) -> str:
    if is_const(lit):
        return "1" if lit == ONE else "0"
    return f"x{lit}" if lit > 0 else f"¬x{-lit}"


def _lit_key(lit: int) -> tuple[int, int]:
    return (var(lit), 0 if lit > 0 else 1)


def sorted_clause(c: Iterable[int]) -> list[int]:
    return sorted(c, key=_lit_key)


# --- substitutions ---------------------------------------------------------


class Substitution(Mapping[int, int]):
    """A negation-respecting map on literals that fixes the constants.

    Stored as a finite map from variable ids to literals; variables outside
    the map are fixed.  Identity entries are dropped so that equal
    substitutions compare equal.
    """

    __slots__ = ("_map", "_hash")

    def __init__(self, mapping: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        m: dict[int, int] = {}
        for v, image in items:
            if v <= 0 or v >= CONST:
                raise ValueError(f"substitution domain must be variables, got {v}")
            check_literal(image)
            if image != v:
                m[v] = image
        self._map = m
        self._hash = None

    # Mapping protocol over the (non-identity) domain
    def __getitem__(self, v: int) -> int:
        return self._map[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self._map)

    def __len__(self) -> int:
        return len(self._map)

    def __eq__(self, other) -> bool:
        if isinstance(other, Substitution):
            return self._map == other._map
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._map.items()))
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(f"x{v}↦{_pretty(l)}" for v, l in sorted(self._map.items()))
        return f"Substitution({{{inner}}})"

    def __call__(self, lit: int) -> int:
        if lit > 0:
            return self._map.get(lit, lit)
        return -self._map.get(-lit, -lit)

    @property
    def domain(self) -> set[int]:
        return set(self._map)

    def image_vars(self) -> set[int]:
        return {var(l) for l in self._map.values() if not is_const(l)}

    def is_assignment(self) -> bool:
        return all(is_const(l) for l in self._map.values())


IDENTITY = Substitution()


def substitution(pairs: Mapping[int, int] | Iterable[tuple[int, int]] = ()) -> Substitution:
    return Substitution(pairs)


class Assignment(Substitution):
    """A substitution whose range is {0, 1}.

    ``total_over`` records the variable set the assignment was declared
    total for (it may be empty for partial assignments).
    """

    __slots__ = ("total_over",)

    def __init__(self, values: Mapping[int, int | bool], total_over: Iterable[int] | None = None):
        super().__init__({v: (ONE if b else ZERO) for v, b in values.items()})
        # identity entries never occur: images are constants
        self.total_over = frozenset(values) if total_over is None else frozenset(total_over)

    def value(self, v: int) -> int:
        return 1 if self._map[v] == ONE else 0

    def as_dict(self) -> dict[int, int]:
        return {v: (1 if l == ONE else 0) for v, l in self._map.items()}

    def __repr__(self) -> str:
        inner = ", ".join(f"x{v}={b}" for v, b in sorted(self.as_dict().items()))
        return f"Assignment({{{inner}}})"


def compose(tau: Substitution, omega: Substitution) -> Substitution:
    """``tau ∘ omega``: first apply ``omega``, then ``tau``."""
    out = {v: tau(omega(v)) for v in set(omega) | set(tau)}
    return Substitution(out)


def sub_clause(omega: Substitution, c: Iterable[int]) -> frozenset:
    return frozenset(omega(l) for l in c)


def sub_cnf(omega: Substitution, clauses: Iterable[Iterable[int]]) -> frozenset:
    return frozenset(sub_clause(omega, c) for c in clauses)


def substitute(omega: Substitution, target):
    """Literal-wise image of a clause, CNF, PB constraint or PB formula."""
    if isinstance(target, PbConstraint):
        return target.substitute(omega)
    if isinstance(target, frozenset):
        if all(isinstance(x, int) for x in target):
            return sub_clause(omega, target)
        return sub_cnf(omega, target)
    if isinstance(target, (list, tuple)):
        if all(isinstance(x, PbConstraint) for x in target):
            return type(target)(c.substitute(omega) for c in target)
        return type(target)(sub_clause(omega, c) for c in target)
    raise TypeError(f"cannot substitute into {type(target).__name__}")


def is_symmetry(omega: Substitution, clauses: Iterable[Iterable[int]]) -> bool:
    gamma = cnf(clauses)
    return sub_cnf(omega, gamma) == gamma


def satisfies(omega: Substitution, clauses: Iterable[Iterable[int]]) -> bool:
    """``ω ⊨ Γ``: every clause of ``Γ↾ω`` is tautologous."""
    return all(is_tautologous(sub_clause(omega, c)) for c in clauses)


def iterate_substitution(omega: Substitution, m: int) -> Substitution:
    """Compute ``ω^m`` without ``m`` compositions.

    Each literal's orbit under ``ω`` is a walk that runs into a cycle; the
    tail and cycle are found once and ``m`` is reduced modulo the cycle
    length, so ``m`` may be astronomically large.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0 or not omega:
        return IDENTITY
    out = {}
    for v in omega:
        out[v] = _power_image(omega, v, m)
    return Substitution(out)


def _power_image(omega: Substitution, start: int, m: int) -> int:
    seen: dict[int, int] = {}
    walk: list[int] = []
    cur = start
    while cur not in seen:
        if len(walk) == m:
            return cur
        seen[cur] = len(walk)
        walk.append(cur)
        cur = omega(cur)
    k = seen[cur]
    period = len(walk) - k
    if m < len(walk):
        return walk[m]
    return walk[k + (m - k) % period]


# --- pseudo-Boolean constraints -------------------------------------------


@dataclass(frozen=True)
class PbConstraint:
    """``Σ coef·x_v ≥ bound`` over positive variables, like terms merged.

    Every constructor goes through :meth:`from_terms`, so two constraints
    are equal exactly when their normal forms agree.
    """

    terms: tuple[tuple[int, int], ...]  # (var, nonzero coefficient), sorted by var
    bound: int

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]], relation: str = ">=", bound: int = 0) -> "PbConstraint":
        coefs: dict[int, int] = {}
        b = bound
        for coef, lit in terms:
            check_literal(lit)
            if lit == ONE:
                b -= coef
            elif lit == ZERO:
                pass
            elif lit > 0:
                coefs[lit] = coefs.get(lit, 0) + coef
            else:
                # c·¬x = c − c·x
                b -= coef
                coefs[-lit] = coefs.get(-lit, 0) - coef
        if relation == "<=":
            coefs = {v: -c for v, c in coefs.items()}
            b = -b
        elif relation != ">=":
            raise ValueError(f"unknown relation {relation!r}")
        return cls(tuple(sorted((v, c) for v, c in coefs.items() if c)), b)

    @classmethod
    def geq(cls, terms: Iterable[tuple[int, int]], bound: int) -> "PbConstraint":
        return cls.from_terms(terms, ">=", bound)

    @classmethod
    def leq(cls, terms: Iterable[tuple[int, int]], bound: int) -> "PbConstraint":
        return cls.from_terms(terms, "<=", bound)

    @property
    def coefs(self) -> dict[int, int]:
        return dict(self.terms)

    def vars(self) -> set[int]:
        return {v for v, _ in self.terms}

    def negate(self) -> "PbConstraint":
        # ¬(A x ≥ b) is A x ≤ b − 1
        return PbConstraint.leq(((c, v) for v, c in self.terms), self.bound - 1)

    def substitute(self, omega: Substitution) -> "PbConstraint":
        if not omega:
            return self
        return PbConstraint.from_terms(((c, omega(v)) for v, c in self.terms), ">=", self.bound)

    def scaled(self, k: int) -> "PbConstraint":
        return PbConstraint(tuple((v, c * k) for v, c in self.terms if c * k), self.bound * k)

    def plus(self, other: "PbConstraint") -> "PbConstraint":
        coefs = dict(self.terms)
        for v, c in other.terms:
            coefs[v] = coefs.get(v, 0) + c
        return PbConstraint(tuple(sorted((v, c) for v, c in coefs.items() if c)), self.bound + other.bound)

    def lhs(self, values: Mapping[int, int]) -> int:
        return sum(c * values[v] for v, c in self.terms)

    def evaluate(self, values: Mapping[int, int]) -> bool:
        """Truth under a 0/1 map covering the constraint's variables."""
        return self.lhs(values) >= self.bound

    def min_lhs(self) -> int:
        return sum(c for _, c in self.terms if c < 0)

    def max_lhs(self) -> int:
        return sum(c for _, c in self.terms if c > 0)

    def is_trivial(self) -> bool:
        """True for every 0/1 assignment."""
        return self.min_lhs() >= self.bound

    def is_contradiction(self) -> bool:
        """The syntactic contradiction ``0 ≥ b`` with ``b ≥ 1``."""
        return not self.terms and self.bound >= 1

    def literal_form(self) -> tuple[list[tuple[int, int]], int]:
        """Rewrite as ``Σ a·ℓ ≥ b`` with every ``a > 0`` over literals."""
        out = []
        b = self.bound
        for v, c in self.terms:
            if c > 0:
                out.append((c, v))
            else:
                out.append((-c, -v))
                b -= c
        return out, b

    def __str__(self) -> str:
        return format_pb(self)


def format_pb(c: PbConstraint) -> str:
    parts = [f"{coef:+d} x{v}" for v, coef in c.terms]
    body = " ".join(parts) if parts else "0"
    return f"{body} >= {c.bound} ;"


FALSE_PB = PbConstraint((), 1)
TRUE_PB = PbConstraint((), 0)


def clause_to_pb(c: Iterable[int]) -> PbConstraint:
    """``C*``: ``Σ x + Σ (1 − y) ≥ 1``."""
    return PbConstraint.geq(((1, l) for l in c), 1)


def cnf_to_pb(clauses: Iterable[Iterable[int]]) -> list[PbConstraint]:
    out: list[PbConstraint] = []
    seen: set[PbConstraint] = set()
    for c in clauses:
        p = clause_to_pb(c)
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def pb_negate(c: PbConstraint) -> PbConstraint:
    return c.negate()


def pb_vars(constraints: Iterable[PbConstraint]) -> set[int]:
    out: set[int] = set()
    for c in constraints:
        out.update(c.vars())
    return out


class FreshVars:
    """Monotone counter handing out unused variable ids."""

    def __init__(self, start: int):
        if start < 1:
            raise ValueError("variables are numbered from 1")
        self.next = start

    @classmethod
    def above(cls, *var_sets: Iterable[int]) -> "FreshVars":
        top = 0
        for vs in var_sets:
            for v in vs:
                top = max(top, v)
        return cls(top + 1)

    def __call__(self) -> int:
        v = self.next
        self.next += 1
        return v

    def take(self, n: int) -> list[int]:
        return [self() for _ in range(n)]

    def reserve(self, vs: Iterable[int]) -> None:
        for v in vs:
            if v >= self.next:
                self.next = v + 1
