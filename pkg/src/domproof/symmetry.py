"""Symmetry breaking: lex-leader constraints, Q refutations and the Q₁ circuit."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import (
    ONE,
    ZERO,
    FreshVars,
    Substitution,
    cnf,
    cnf_vars,
    is_const,
    is_symmetry,
    var,
)
from .er import CircuitBuilder, CircuitDesc, ErDerivation, check_er
from .errors import ProofRejected
from .ordering import LexGadget, gen_lex, lex_aux_count


def _check_order(gamma, order: Sequence[int]) -> tuple[int, ...]:
    order = tuple(order)
    if len(set(order)) != len(order):
        raise ValueError("variable order lists a variable twice")
    missing = cnf_vars(gamma) - set(order)
    if missing:
        raise ValueError(f"variable order misses {sorted(missing)}")
    return order


def lex_leader(
    gamma: Iterable[Iterable[int]],
    omega: Substitution,
    order: Sequence[int],
    aux: Sequence[int] | None = None,
    fresh: FreshVars | None = None,
) -> LexGadget:
    """The gadget ``[z̄ ≤lex z̄↾ω]`` for a symmetry ``ω`` of ``gamma``."""
    gamma = cnf(gamma)
    order = _check_order(gamma, order)
    if not is_symmetry(omega, gamma):
        raise ValueError("substitution is not a symmetry of the formula")
    if fresh is None and aux is None:
        fresh = FreshVars.above(order, cnf_vars(gamma))
    image = tuple(omega(v) for v in order)
    return gen_lex(len(order), strict=False, msb_first=True, x=order, y=image, aux=aux, fresh=fresh)


def gen_lex_leader(gamma, omega: Substitution, order: Sequence[int], fresh: FreshVars | None = None) -> tuple[frozenset, ...]:
    """Clauses of the lex-leader constraint, auxiliaries drawn fresh."""
    return lex_leader(gamma, omega, order, fresh=fresh).cnf


def break_symmetries(gamma, symmetries: Sequence[Substitution], order: Sequence[int]) -> tuple[tuple[frozenset, ...], list[LexGadget]]:
    """``Γ`` plus one lex-leader per symmetry, each with its own auxiliaries."""
    gamma = tuple(dict.fromkeys(frozenset(c) for c in gamma))
    fresh = FreshVars.above(order, cnf_vars(gamma))
    leaders = [lex_leader(gamma, w, order, fresh=fresh) for w in symmetries]
    out = list(gamma)
    for g in leaders:
        out += g.cnf
    return tuple(out), leaders


# --- Q refutations ----------------------------------------------------------


@dataclass(frozen=True)
class QRefutation:
    """An ER refutation of ``Γ`` plus lex-leaders for listed symmetries.

    The refutation's premises must be ``Γ`` followed by the leader clauses
    in the order the symmetries are listed.
    """

    gamma: tuple[frozenset, ...]
    order: tuple[int, ...]
    symmetries: tuple[Substitution, ...]
    aux: tuple[tuple[int, ...], ...]
    pi: ErDerivation

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(frozenset(c) for c in self.gamma))
        object.__setattr__(self, "order", tuple(self.order))
        object.__setattr__(self, "symmetries", tuple(self.symmetries))
        object.__setattr__(self, "aux", tuple(tuple(a) for a in self.aux))

    def leaders(self) -> list[LexGadget]:
        return [
            gen_lex(len(self.order), strict=False, msb_first=True, x=self.order, y=tuple(w(v) for v in self.order), aux=a)
            for w, a in zip(self.symmetries, self.aux)
        ]

    def premises(self) -> tuple[frozenset, ...]:
        out = list(self.gamma)
        for g in self.leaders():
            out += g.cnf
        return tuple(out)


def check_q(p: QRefutation, k_limit: int | None = None) -> None:
    """Raise :class:`ProofRejected` unless ``p`` is a valid Q refutation."""
    if k_limit is not None and len(p.symmetries) > k_limit:
        raise ProofRejected(f"{len(p.symmetries)} symmetries exceed the limit of {k_limit}")
    if len(p.aux) != len(p.symmetries):
        raise ProofRejected("need one auxiliary list per symmetry")
    gamma_vars = cnf_vars(p.gamma)
    if len(set(p.order)) != len(p.order) or set(p.order) != gamma_vars:
        raise ProofRejected("variable order must list exactly the variables of the formula")
    need = lex_aux_count(len(p.order), False)
    used: set[int] = set()
    for i, (w, a) in enumerate(zip(p.symmetries, p.aux)):
        if not is_symmetry(w, p.gamma):
            raise ProofRejected(f"substitution {i} is not a symmetry")
        if len(a) != need or len(set(a)) != need or any(v <= 0 or is_const(v) for v in a):
            raise ProofRejected(f"leader {i} needs {need} distinct auxiliary variables")
        clash = set(a) & gamma_vars
        if clash:
            raise ProofRejected(f"leader {i} reuses formula variable x{min(clash)}")
        shared = set(a) & used
        if shared:
            raise ProofRejected(f"leader {i} shares auxiliary variable x{min(shared)} with an earlier leader")
        used |= set(a)
    if tuple(p.pi.premises) != p.premises():
        raise ProofRejected("refutation does not list the formula and leaders as its premises")
    checked = ErDerivation(p.pi.premises, p.pi.steps, p.pi.conclusions, p.pi.protected | gamma_vars | used)
    produced = check_er(checked)
    if frozenset() not in set(produced) | set(p.pi.premises):
        raise ProofRejected("refutation does not reach the empty clause")


def is_valid_q(p: QRefutation, k_limit: int | None = None) -> bool:
    try:
        check_q(p, k_limit)
    except ProofRejected:
        return False
    return True


# --- asymmetric padding and symmetry search -----------------------------------


def asymmetrize(gamma: Iterable[Iterable[int]]) -> tuple[frozenset, ...]:
    """Add ``x_i ∨ y_1 ∨ … ∨ y_i`` for fresh ``y_1 … y_m``."""
    gamma = tuple(dict.fromkeys(frozenset(c) for c in gamma))
    xs = sorted(cnf_vars(gamma))
    ys = FreshVars.above(xs).take(len(xs))
    return gamma + tuple(frozenset([x, *ys[: i + 1]]) for i, x in enumerate(xs))


def literal_permutations(vs: Sequence[int]) -> Iterator[Substitution]:
    """Every substitution permuting the literals over ``vs`` (negation respecting)."""
    vs = list(vs)
    for perm in itertools.permutations(vs):
        for signs in itertools.product((1, -1), repeat=len(vs)):
            yield Substitution({v: s * p for v, p, s in zip(vs, perm, signs)})


def symmetries(gamma: Iterable[Iterable[int]]) -> list[Substitution]:
    """All literal-permutation symmetries of a small formula, identity included."""
    gamma = cnf(gamma)
    return [w for w in literal_permutations(sorted(cnf_vars(gamma))) if is_symmetry(w, gamma)]


# --- the Q₁ circuit -----------------------------------------------------------


def orbit(omega: Substitution, lit: int) -> tuple[list[int], int]:
    """Walk ``lit, ω(lit), …`` until it repeats; the cycle starts at the index returned."""
    seen: dict[int, int] = {}
    walk: list[int] = []
    cur = lit
    while cur not in seen:
        seen[cur] = len(walk)
        walk.append(cur)
        cur = omega(cur)
    return walk, seen[cur]


class _Q1Builder:
    def __init__(self, gamma, omega: Substitution, order: Sequence[int]):
        self.gamma = gamma
        self.order = list(order)
        self.n = len(self.order)
        self.b = CircuitBuilder(self.n)
        self.pos = {v: j for j, v in enumerate(self.order)}
        self.walks = {v: orbit(omega, v) for v in self.order}
        self.width = self.n + 1  # holds 0 .. 2^n + 1

    # registers are lsb-first lists of node refs
    def const_reg(self, value: int, width: int) -> list[int]:
        return [self.b.const((value >> k) & 1) for k in range(width)]

    def add(self, a: list[int], c: list[int]) -> list[int]:
        b = self.b
        width = max(len(a), len(c))
        zero = b.const(0)
        a = a + [zero] * (width - len(a))
        c = c + [zero] * (width - len(c))
        carry = zero
        out = []
        for x, y in zip(a, c):
            s = b.xor(x, y)
            out.append(b.xor(s, carry))
            carry = b.or_(b.and_(x, y), b.and_(s, carry))
        return out + [carry]

    def eq_const(self, reg: list[int], k: int) -> int:
        return self.b.all_([bit if (k >> j) & 1 else -bit for j, bit in enumerate(reg)])

    def lt_const(self, reg: list[int], k: int) -> int:
        """``reg < k`` for a nonnegative constant."""
        b = self.b
        if k >= 1 << len(reg):
            return b.const(1)
        lt = b.const(0)
        for j, bit in enumerate(reg):  # from the least significant bit up
            if (k >> j) & 1:
                lt = b.or_(-bit, b.and_(bit, lt))
            else:
                lt = b.and_(-bit, lt)
        return lt

    def mod_hot(self, reg: list[int], m: int) -> list[int]:
        """One-hot ``reg mod m``."""
        b = self.b
        hot = [b.const(1)] + [b.const(0)] * (m - 1)
        for bit in reversed(reg):
            nxt = [[] for _ in range(m)]
            for r in range(m):
                nxt[(2 * r) % m].append(b.and_(hot[r], -bit))
                nxt[(2 * r + 1) % m].append(b.and_(hot[r], bit))
            hot = [b.any_(terms) for terms in nxt]
        return hot

    def lit_ref(self, lit: int, bits: list[int]) -> int:
        if lit == ONE:
            return self.b.const(1)
        if lit == ZERO:
            return self.b.const(0)
        ref = bits[self.pos[var(lit)]]
        return ref if lit > 0 else -ref

    def iterate(self, reg: list[int]) -> list[int]:
        """Bits of ``α↾ω^i`` (msb-first, like the inputs) for ``i`` in ``reg``."""
        b = self.b
        inputs = b.inputs()
        hots: dict[int, list[int]] = {}
        out = []
        for v in self.order:
            walk, k = self.walks[v]
            m = len(walk) - k
            if m not in hots:
                hots[m] = self.mod_hot(reg, m)
            tail = self.lt_const(reg, k)
            terms = []
            for p, lit in enumerate(walk):
                if p < k:
                    sel = self.eq_const(reg, p)
                else:
                    sel = b.and_(-tail, hots[m][p % m])
                terms.append(b.and_(sel, self.lit_ref(lit, inputs)))
            out.append(b.any_(terms))
        return out

    def satisfies(self, bits: list[int]) -> int:
        b = self.b
        return b.all_([b.any_([self.lit_ref(l, bits) for l in sorted(c)]) for c in sorted(self.gamma, key=sorted)])

    def good(self, reg: list[int]) -> tuple[int, list[int]]:
        """``α_i ⊨ Γ`` and ``α_i ≤ 2^n − i`` as numbers."""
        alpha = self.iterate(reg)
        total = self.add(list(reversed(alpha)), reg)
        return self.b.and_(self.satisfies(alpha), self.lt_const(total, (1 << self.n) + 1)), alpha

    def build(self) -> CircuitDesc:
        b = self.b
        lo = self.const_reg(0, self.width)
        hi = self.const_reg((1 << self.n) + 1, self.width)
        for _ in range(self.n + 1):
            mid = self.add(lo, hi)[1:]
            ok, _ = self.good(mid)
            lo = [b.mux(ok, m, l) for m, l in zip(mid, lo)]
            hi = [b.mux(ok, h, m) for h, m in zip(hi, mid)]
        found = self.iterate(lo)
        # an α that already satisfies the leader is returned unchanged
        alpha = b.inputs()
        keep = self.leq(alpha, self.iterate(self.const_reg(1, self.width)))
        return b.build(outputs=[b.mux(keep, a, f) for a, f in zip(alpha, found)])

    def leq(self, a: list[int], c: list[int]) -> int:
        """``a ≤ c`` for msb-first bit lists."""
        b = self.b
        le = b.const(1)
        for x, y in zip(reversed(a), reversed(c)):
            # decided by this bit unless the bits agree
            le = b.or_(b.and_(-x, y), b.and_(-b.xor(x, y), le))
        return le


def q1_circuit(gamma: Iterable[Iterable[int]], omega: Substitution, order: Sequence[int]) -> CircuitDesc:
    """A circuit mapping a model α of Γ to a model β with ``β ≤lex β↾ω``.

    It binary-searches an index ``i`` such that ``α_i = α↾ω^i`` satisfies Γ
    and ``α_i ≤ 2^n − i`` while ``i + 1`` does not, then outputs ``α_i``;
    when α itself already satisfies ``α ≤lex α↾ω`` it outputs α.
    Inputs and outputs follow ``order``, most significant first.
    """
    gamma = cnf(gamma)
    order = _check_order(gamma, order)
    if not is_symmetry(omega, gamma):
        raise ValueError("substitution is not a symmetry of the formula")
    stray = {var(l) for v in order for l in [omega(v)] if not is_const(l)} - set(order)
    if stray:
        raise ValueError(f"symmetry maps into variables {sorted(stray)} outside the order")
    return _Q1Builder(gamma, omega, order).build()


def run_q1(circuit: CircuitDesc, alphas: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Evaluate the circuit on many assignments at once (bit-sliced)."""
    if not alphas:
        return []
    width = len(alphas)
    words = [sum(a[j] << k for k, a in enumerate(alphas)) for j in range(circuit.n_inputs)]
    outs = circuit.evaluate_outputs(words, width)
    return [tuple((w >> k) & 1 for w in outs) for k in range(width)]
