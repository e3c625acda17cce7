"""Brute-force semantics: satisfiability, lex-minimal models, validity.

Everything here enumerates all 0/1 assignments to a declared variable
order, so it is only meant for desk-scale formulas.  Tables are numpy
arrays indexed by the assignment read as a binary number, first variable
of the order most significant; the first satisfying index is therefore
the lexicographically least model.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .core import (
    ONE,
    ZERO,
    Assignment,
    PbConstraint,
    Substitution,
    cnf_vars,
    compose,
    is_const,
    pb_vars,
    satisfies,
    var,
)
from .er import ExtendAlias, ExtendAnd

DEFAULT_CAP = 24
_INT64_SAFE = 1 << 62


class CapExceeded(ValueError):
    pass


def _split(formula) -> tuple[list[frozenset], list[PbConstraint]]:
    clauses, pbs = [], []
    for item in formula:
        if isinstance(item, PbConstraint):
            pbs.append(item)
        else:
            clauses.append(frozenset(item))
    return clauses, pbs


def formula_vars(formula) -> set[int]:
    clauses, pbs = _split(formula)
    return cnf_vars(clauses) | pb_vars(pbs)


def _order(formula, order: Sequence[int] | None) -> list[int]:
    if order is None:
        return sorted(formula_vars(formula))
    order = list(order)
    if len(set(order)) != len(order):
        raise ValueError("variable order has duplicates")
    missing = formula_vars(formula) - set(order)
    if missing:
        raise ValueError(f"order does not cover variables {sorted(missing)}")
    return order


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceeded(f"{n} variables exceeds the enumeration cap of {cap}")


def _clause_masks(clauses, pos_of, n):
    pos, neg = [], []
    for c in clauses:
        if ONE in c or any(-l in c for l in c):
            continue
        p = q = 0
        for l in c:
            if l == ZERO:
                continue
            bit = 1 << (n - 1 - pos_of[var(l)])
            if l > 0:
                p |= bit
            else:
                q |= bit
        pos.append(p)
        neg.append(q)
    return np.array(pos, dtype=np.uint64), np.array(neg, dtype=np.uint64)


def _pb_arrays(pbs, pos_of, n):
    rows, bounds, big = [], [], []
    for c in pbs:
        if c.is_trivial():
            continue
        if c.max_lhs() - c.min_lhs() >= _INT64_SAFE or abs(c.bound) >= _INT64_SAFE:
            big.append(c)
            continue
        row = [0] * n
        for v, coef in c.terms:
            row[pos_of[v]] = coef
        rows.append(row)
        bounds.append(c.bound)
    coefs = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    return np.ascontiguousarray(coefs), np.array(bounds, dtype=np.int64), big


def _big_pb_table(c: PbConstraint, pos_of, n) -> np.ndarray:
    total = 1 << n
    out = np.zeros(total, dtype=np.uint8)
    for a in range(total):
        s = 0
        for v, coef in c.terms:
            if (a >> (n - 1 - pos_of[v])) & 1:
                s += coef
        out[a] = s >= c.bound
    return out


def model_table(formula, order: Sequence[int] | None = None, cap: int = DEFAULT_CAP) -> np.ndarray:
    """0/1 array over all assignments to ``order`` marking the models."""
    order = _order(formula, order)
    n = len(order)
    _check_cap(n, cap)
    pos_of = {v: i for i, v in enumerate(order)}
    clauses, pbs = _split(formula)
    if any(len(c) == 0 or c == frozenset([ZERO]) for c in clauses) or any(
        not c.terms and c.bound > 0 for c in pbs
    ):
        return np.zeros(1 << n, dtype=np.uint8)
    pos, neg = _clause_masks(clauses, pos_of, n)
    table = kernels.cnf_table(pos, neg, n) if len(pos) else np.ones(1 << n, dtype=np.uint8)
    coefs, bounds, big = _pb_arrays(pbs, pos_of, n)
    if len(bounds):
        table &= kernels.pb_table(coefs, bounds, n)
    for c in big:
        table &= _big_pb_table(c, pos_of, n)
    return table


def index_to_assignment(a: int, order: Sequence[int]) -> Assignment:
    n = len(order)
    return Assignment({v: (a >> (n - 1 - i)) & 1 for i, v in enumerate(order)}, total_over=order)


def assignment_to_index(alpha, order: Sequence[int]) -> int:
    vals = alpha.as_dict() if isinstance(alpha, Assignment) else dict(alpha)
    a = 0
    for v in order:
        a = (a << 1) | int(vals[v])
    return a


def brute_sat(formula, order: Sequence[int] | None = None, cap: int = DEFAULT_CAP) -> Assignment | None:
    """A satisfying total assignment over ``order``, or None."""
    order = _order(formula, order)
    _check_cap(len(order), cap)
    clauses, pbs = _split(formula)
    if not pbs:
        if any(len(c) == 0 or c == frozenset([ZERO]) for c in clauses):
            return None
        pos_of = {v: i for i, v in enumerate(order)}
        pos, neg = _clause_masks(clauses, pos_of, len(order))
        if not len(pos):
            return index_to_assignment(0, order)
        a = kernels.first_cnf_model(pos, neg, len(order))
        return None if a < 0 else index_to_assignment(int(a), order)
    table = model_table(formula, order, cap)
    hits = np.flatnonzero(table)
    return index_to_assignment(int(hits[0]), order) if hits.size else None


def is_satisfiable(formula, cap: int = DEFAULT_CAP) -> bool:
    return brute_sat(formula, None, cap) is not None


def equisatisfiable(first, second, cap: int = DEFAULT_CAP) -> bool:
    _check_cap(len(formula_vars(first) | formula_vars(second)), cap)
    return is_satisfiable(first, cap) == is_satisfiable(second, cap)


def lex_min_model(formula, order: Sequence[int], cap: int = DEFAULT_CAP) -> Assignment | None:
    """Least model in lexicographic order, ``order[0]`` most significant."""
    return brute_sat(formula, order, cap)


def all_models(formula, order: Sequence[int] | None = None, cap: int = DEFAULT_CAP) -> list[Assignment]:
    order = _order(formula, order)
    table = model_table(formula, order, cap)
    return [index_to_assignment(int(a), order) for a in np.flatnonzero(table)]


def projected_table(formula, base: Sequence[int], cap: int = DEFAULT_CAP) -> np.ndarray:
    """Table over ``base`` marking assignments that extend to a model."""
    base = list(base)
    extra = sorted(formula_vars(formula) - set(base))
    table = model_table(formula, base + extra, cap)
    return table.reshape(1 << len(base), 1 << len(extra)).any(axis=1).astype(np.uint8)


def extends(premises, conclusions, base: Iterable[int] | None = None, cap: int = DEFAULT_CAP) -> bool:
    """Every model of ``premises`` over ``base`` extends to one of ``premises ∧ conclusions``."""
    premises = list(premises)
    base = sorted(formula_vars(premises) if base is None else set(base))
    both = premises + list(conclusions)
    lhs = projected_table(premises, base, cap)
    rhs = projected_table(both, base, cap)
    return bool(np.all(rhs >= lhs))


def entails(premises, conclusions, cap: int = DEFAULT_CAP) -> bool:
    """Every model of ``premises`` satisfies each of ``conclusions``."""
    premises = list(premises)
    conclusions = list(conclusions)
    order = sorted(formula_vars(premises) | formula_vars(conclusions))
    lhs = model_table(premises, order, cap)
    for c in conclusions:
        if np.any(lhs & (1 - model_table([c], order, cap))):
            return False
    return True


def lex_leq(alpha, beta, order: Sequence[int]) -> bool:
    a = alpha.as_dict() if isinstance(alpha, Assignment) else alpha
    b = beta.as_dict() if isinstance(beta, Assignment) else beta
    return [a[v] for v in order] <= [b[v] for v in order]


def apply_assignment(alpha: Assignment, omega: Substitution, order: Sequence[int]) -> Assignment:
    """``α∘ω`` restricted to ``order``."""
    composed = compose(alpha, omega)
    vals = {}
    for v in order:
        lit = composed(v)
        if not is_const(lit):
            raise ValueError(f"α∘ω leaves x{v} unassigned")
        vals[v] = 1 if lit == ONE else 0
    return Assignment(vals, total_over=order)


def local_min_descent(gamma, omega: Substitution, alpha: Assignment, order: Sequence[int]) -> Assignment:
    """Follow ``α ← α∘ω`` while the image satisfies Γ and is lex-smaller."""
    gamma = list(gamma)
    if not satisfies(alpha, gamma):
        raise ValueError("α does not satisfy Γ")
    cur = alpha
    while True:
        nxt = apply_assignment(cur, omega, order)
        if satisfies(nxt, gamma) and lex_leq(nxt, cur, order) and not lex_leq(cur, nxt, order):
            cur = nxt
        else:
            return cur


def config_valid(cfg, cap: int = DEFAULT_CAP) -> bool:
    """Validity of a dominance configuration by double enumeration.

    Valid means the core is satisfiable and every core model α has a model
    β of core ∪ derived with ``β ⪯ α`` in the configuration's preorder.
    """
    core = list(cfg.core)
    both = core + list(cfg.derived)
    z = list(cfg.zvars)
    rest = sorted(formula_vars(both) - set(z))
    base = z + rest
    _check_cap(len(base), cap)
    core_models = model_table(core, base, cap).reshape(1 << len(z), -1).any(axis=1)
    if not core_models.any():
        return False
    both_models = model_table(both, base, cap).reshape(1 << len(z), -1).any(axis=1)
    if not both_models.any():
        return False
    lin = cfg.order.linear_coefficients()
    if lin is not None:
        weights = _projection_weights(lin, len(z))
        return int(weights[both_models].min()) <= int(weights[core_models].min())
    alphas = np.flatnonzero(core_models)
    betas = np.flatnonzero(both_models)
    for a in alphas:
        if not any(cfg.order.holds(_bits(int(b), len(z)), _bits(int(a), len(z))) for b in betas):
            return False
    return True


def _bits(a: int, n: int) -> list[int]:
    return [(a >> (n - 1 - i)) & 1 for i in range(n)]


def _projection_weights(coefs: Sequence[int], n: int) -> np.ndarray:
    total = 1 << n
    if any(abs(c) >= (1 << 40) for c in coefs):
        return np.array([sum(c * b for c, b in zip(coefs, _bits(a, n))) for a in range(total)], dtype=object)
    idx = np.arange(total, dtype=np.int64)
    w = np.zeros(total, dtype=np.int64)
    for i, c in enumerate(coefs):
        w += c * ((idx >> (n - 1 - i)) & 1)
    return w


def extension_table(block, extra, order: Sequence[int]) -> np.ndarray:
    """Which base assignments extend to a model of ``block ∧ extra``.

    ``block`` must be a valid extension block over ``order``, so every base
    assignment has exactly one extension: the gate-by-gate evaluation.  All
    ``2^n`` assignments are evaluated at once as bit-sliced big integers and
    every clause is then checked against the evaluation.
    """
    block.validate()
    order = list(order)
    n = len(order)
    _check_cap(n, cap=DEFAULT_CAP)
    total = 1 << n
    mask = (1 << total) - 1
    words: dict[int, int] = {}
    for i, v in enumerate(order):
        # bit a of the word is the value of v in assignment a (order[0] most significant)
        period = 1 << (n - 1 - i)
        block_pat = ((1 << period) - 1) << period
        w = 0
        for start in range(0, total, 2 * period):
            w |= block_pat << start
        words[v] = w

    def rd(lit: int) -> int:
        if lit == ONE:
            return mask
        if lit == ZERO:
            return 0
        return words[lit] if lit > 0 else words[-lit] ^ mask

    for ax in block.axioms:
        if isinstance(ax, ExtendAnd):
            words[ax.y] = rd(ax.u) & rd(ax.v)
        elif isinstance(ax, ExtendAlias):
            words[ax.y] = rd(ax.u)
        else:
            words[ax.y] = mask if ax.bit else 0
    ok = mask
    for c in list(block.clauses()) + list(extra):
        sat = 0
        for l in c:
            sat |= rd(l)
        ok &= sat
    bits = np.frombuffer(ok.to_bytes((total + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(bits, bitorder="little")[:total].astype(np.uint8)
