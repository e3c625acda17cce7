"""Small unsatisfiable CNFs with ER-PLS refutations that use the dominance rule.

``build_corpus()`` recreates every proof from scratch; the checked-in
copies under ``tests/data/corpus`` are written by ``tools/gen_corpus.py``.
"""

from __future__ import annotations

import itertools
import random
from pathlib import Path

from domproof import oracle
from domproof.core import ZERO, Substitution, cnf_vars, is_tautologous, sub_clause
from domproof.er import ExtendAnd, ExtensionBlock, ResolutionBuilder
from domproof.erpls import ErplsProof, ErRule
from domproof.formats import parse_erpls

from .erpls_build import apply, dom_rule, er_rule

F = frozenset


def _php(pigeons, holes):
    v = lambda i, j: i * holes + j + 1
    cls = [F(v(i, j) for j in range(holes)) for i in range(pigeons)]
    cls += [F({-v(i, j), -v(k, j)}) for j in range(holes) for i, k in itertools.combinations(range(pigeons), 2)]
    return cls, v


def _swap_rows(v, a, b, width):
    out = {}
    for j in range(width):
        out[v(a, j)] = v(b, j)
        out[v(b, j)] = v(a, j)
    return out


def _finish(gamma, steps):
    running = tuple(gamma)
    for s in steps:
        running = apply(running, s)
    return ErplsProof(tuple(gamma), tuple(steps) + (er_rule(running, [[]]),))


def _chain(gamma, rules):
    """Apply ``(clause, omega, x_order, block)`` dominance rules in turn, then refute."""
    running = tuple(gamma)
    steps = []
    for clause, omega, order, block in rules:
        s = dom_rule(running, clause, omega, order, block)
        steps.append(s)
        running = apply(running, s)
    return _finish(gamma, steps)


def swap3():
    gamma = [F(c) for c in [(1, 2), (-1, -2), (1, -2, 3), (-1, 2, 3), (-3,)]]
    return _chain(gamma, [([-1, 2], {1: 2, 2: 1}, None, None)])


def php32():
    gamma, v = _php(3, 2)
    xs = list(range(1, 7))
    return _chain(gamma, [([-v(0, 0), v(1, 0)], _swap_rows(v, 0, 1, 2), xs, None)])


def php43():
    gamma, v = _php(4, 3)
    xs = list(range(1, 13))
    return _chain(gamma, [([-v(0, 0), v(1, 0)], _swap_rows(v, 0, 1, 3), xs, None)])


def php32_holes():
    # swap the two holes: x_{i,0} ↔ x_{i,1} for every pigeon
    gamma, v = _php(3, 2)
    omega = {}
    for i in range(3):
        omega[v(i, 0)], omega[v(i, 1)] = v(i, 1), v(i, 0)
    return _chain(gamma, [([-v(0, 0), v(0, 1)], omega, list(range(1, 7)), None)])


def _xor_cycle(n):
    cls = []
    for i in range(1, n + 1):
        j = i % n + 1
        cls += [F({i, j}), F({-i, -j})]
    return cls


def xor_cycle_flip(n=3):
    """Odd cycle of x_i ≠ x_{i+1}; flipping every variable is a symmetry."""
    gamma = _xor_cycle(n)
    flip = {i: -i for i in range(1, n + 1)}
    return _chain(gamma, [([-1], flip, None, None)])


def xor_cycle_rotate():
    gamma = _xor_cycle(5)
    rot = {i: i % 5 + 1 for i in range(1, 6)}
    return _chain(gamma, [([-1, 2], rot, None, None)])


def coloring_k4():
    # K4 with three colours; swapping colours 0 and 1 everywhere is a symmetry
    v = lambda node, col: node * 3 + col + 1
    gamma = [F(v(i, c) for c in range(3)) for i in range(4)]
    gamma += [F({-v(i, c), -v(k, c)}) for c in range(3) for i, k in itertools.combinations(range(4), 2)]
    omega = {}
    for i in range(4):
        omega[v(i, 0)], omega[v(i, 1)] = v(i, 1), v(i, 0)
    return _chain(gamma, [([-v(0, 0), v(0, 1)], omega, list(range(1, 13)), None)])


def pure_literal():
    # x4 only occurs negatively, so setting it to 0 keeps every clause
    core = [F(c) for c in [(1, 2), (-1, 2), (1, -2), (-1, -2, 3), (-3, -1)]]
    gamma = core + [F({-4, 1}), F({-4, -2})]
    return _chain(gamma, [([-4], {4: ZERO}, [4, 1, 2, 3], None)])


def extension_image():
    """ω sends x1 to y = x1 ∧ x2, which is smaller whenever x2 is 0."""
    core = [F(c) for c in [(3, 2), (3, -2), (-3, 4), (-3, -4)]]
    gamma = core + [F({-1, 3}), F({-1, -2, 4})]  # x1 only occurs negatively
    xs = sorted(cnf_vars(gamma))
    y = max(xs) + 1
    block = ExtensionBlock(F(xs), (ExtendAnd(y, 1, 2),))
    return _chain(gamma, [([-1, 2], {1: y}, xs, block)])


def two_rules_php32():
    gamma, v = _php(3, 2)
    xs = list(range(1, 7))
    rules = [
        ([-v(0, 0), v(1, 0)], _swap_rows(v, 0, 1, 2), xs, None),
        ([-v(0, 0), v(0, 1)], {v(i, j): v(i, 1 - j) for i in range(3) for j in range(2)}, xs, None),
    ]
    return _chain(gamma, rules)


def er_with_extension():
    """A dominance rule followed by an ER rule that introduces an extension."""
    gamma = _xor_cycle(3)
    s1 = dom_rule(gamma, [-1], {1: -1, 2: -2, 3: -3})
    running = apply(gamma, s1)
    b = ResolutionBuilder(running)
    b.extend(ExtendAnd(4, 1, 2))
    pool = [b.premise(i) for i in range(len(running))] + list(range(3))
    b.derive_by_cases(pool, F())
    return ErplsProof(tuple(gamma), (s1, ErRule(b.derivation([F()]))))


def _orbit_closure(n, omega, seeds):
    out = set()
    for cl in seeds:
        cur = cl
        for _ in range(4 * n):
            out.add(cur)
            cur = sub_clause(omega, cur)
    return [c for c in out if not is_tautologous(c)]


def random_symmetric(seed):
    """A random unsatisfiable CNF closed under a random signed permutation."""
    rng = random.Random(seed)
    while True:
        n = rng.randint(4, 7)
        vs = list(range(1, n + 1))
        perm = vs[:]
        rng.shuffle(perm)
        omega = Substitution({v: p * rng.choice((1, 1, -1)) for v, p in zip(vs, perm)})
        first = next((v for v in vs if omega(v) != v), None)
        if first is None or omega(first) == -first:
            continue
        seeds = [F(rng.choice((1, -1)) * v for v in rng.sample(vs, 3)) for _ in range(rng.randint(3, 6))]
        gamma = sorted(_orbit_closure(n, omega, seeds), key=sorted)
        if cnf_vars(gamma) != set(vs) or oracle.is_satisfiable(gamma):
            continue
        order = [first] + [v for v in vs if v != first]
        # positions before ``first`` are fixed, so ¬C makes the image strictly smaller there
        clause = [-first, omega(first)]
        return _chain(gamma, [(clause, dict(omega.items()), order, None)])


CORPUS = {
    "swap3": swap3,
    "php32": php32,
    "php43": php43,
    "php32_holes": php32_holes,
    "xor_cycle3": xor_cycle_flip,
    "xor_cycle5_flip": lambda: xor_cycle_flip(5),
    "xor_cycle5_rotate": xor_cycle_rotate,
    "coloring_k4": coloring_k4,
    "pure_literal": pure_literal,
    "extension_image": extension_image,
    "two_rules_php32": two_rules_php32,
    "er_with_extension": er_with_extension,
    "random_symmetric_1": lambda: random_symmetric(1),
    "random_symmetric_2": lambda: random_symmetric(2),
}


def build_corpus(names=None) -> dict[str, ErplsProof]:
    return {k: CORPUS[k]() for k in (names or CORPUS)}


DATA = Path(__file__).resolve().parents[1] / "data" / "corpus"


def load_corpus() -> dict[str, ErplsProof]:
    """The checked-in corpus, parsed from its text files."""
    return {p.stem: parse_erpls(p.read_text()) for p in sorted(DATA.glob("*.erpls"))}
