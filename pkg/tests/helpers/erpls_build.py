"""Build ER-PLS steps for small formulas by brute-force tree resolution."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from domproof.core import FreshVars, Substitution, cnf_vars
from domproof.er import ExtensionBlock
from domproof.erpls import DomRule, ErRule, extend_cnf, image_clauses, premises_a, premises_b
from domproof.ordering import lex_aux_count

from .refute import derive, refute


def er_rule(running: Sequence[frozenset], targets: Iterable[Iterable[int]], order=None) -> ErRule:
    return ErRule(derive(running, [frozenset(t) for t in targets], order))


def dom_rule(
    running: Sequence[frozenset],
    clause: Iterable[int],
    omega: Mapping[int, int],
    x_order: Sequence[int] | None = None,
    block: ExtensionBlock | None = None,
) -> DomRule:
    xs = tuple(sorted(cnf_vars(running))) if x_order is None else tuple(x_order)
    block = ExtensionBlock(frozenset(xs)) if block is None else block
    omega = Substitution(omega)
    fresh = FreshVars.above(xs, block.defined)
    aux = tuple(fresh.take(lex_aux_count(len(xs), False)))
    stub = DomRule(frozenset(clause), xs, block, omega, None, None, aux)
    pa = premises_a(running, stub)
    targets = [d for d in image_clauses(running, omega) if d not in set(pa)]
    pi_a = derive(pa, targets, list(xs) + list(block.defined))
    pi_b = refute(premises_b(running, stub), list(xs) + list(block.defined) + list(aux))
    return DomRule(stub.clause, xs, block, omega, pi_a, pi_b, aux)


def apply(running, step):
    if isinstance(step, ErRule):
        return extend_cnf(running, step.pi.conclusions)
    return extend_cnf(running, [step.clause])
