"""Lexicographic-order gadgets as extension blocks, plus their CP bridge.

Internally bits are numbered least significant first, bit ``i`` carrying
weight ``2^(i-1)``.  The sum bits ``z`` and borrow bits ``c`` satisfy, at
every position, ``x_i + z_i + c_i = y_i + 2·c_{i+1}`` with ``c_1 = 0``,
``x_{r+1} = 0``, ``y_{r+1} = 1`` and ``c_{r+2} = 0``; so ``x + z = y + 2^r``.

Public constructors take argument tuples most significant first by
default and reverse them before building.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .core import FreshVars, PbConstraint, Substitution, clause_to_pb, cnf_to_pb, is_const, sub_clause, var
from .cp import CpBuilder, CpDerivation, instantiate_into
from .er import (
    EXTENSIONS,
    ErDerivation,
    ExtendAlias,
    ExtendAnd,
    Extension,
    ExtensionBlock,
    Premise,
    ResolutionBuilder,
    Resolve,
    Weaken,
    axiom_clauses,
    refutation_to_derivation,
    replay,
)

# Gate lists for one bit.  Each entry is (kind, output role, input roles);
# a negative input role reads the negated role.  Roles are numbered as in
# INTERIOR_ROLES / FIRST_ROLES below, which is also the variable numbering
# used by the frozen CP templates.
INTERIOR_ROLES = ("x", "y", "c", "p", "q", "t", "p2", "q2", "z", "s", "u", "cn")
INTERIOR_GATES = (
    ("and", 4, (1, 3)),  # p  = x ∧ c
    ("and", 5, (-1, -3)),  # q  = ¬x ∧ ¬c
    ("and", 6, (-4, -5)),  # t  = x ⊕ c
    ("and", 7, (6, 2)),  # p2 = t ∧ y
    ("and", 8, (-6, -2)),  # q2 = ¬t ∧ ¬y
    ("and", 9, (-7, -8)),  # z  = t ⊕ y
    ("and", 10, (-2, 6)),  # s  = ¬y ∧ t
    ("and", 11, (-4, -10)),  # u  = ¬(p ∨ s)
    ("alias", 12, (-11,)),  # c' = p ∨ s
)
FIRST_ROLES = ("x", "y", "p2", "q2", "z", "cn")
FIRST_GATES = (
    ("and", 3, (1, 2)),
    ("and", 4, (-1, -2)),
    ("and", 5, (-3, -4)),  # z  = x ⊕ y
    ("and", 6, (1, -2)),  # c' = x ∧ ¬y
)


def bit_axioms(gates, lits: dict[int, int]) -> list[Extension]:
    """Instantiate a gate list; ``lits`` maps every role to a literal."""

    def rd(role: int) -> int:
        return lits[role] if role > 0 else -lits[-role]

    out: list[Extension] = []
    for kind, role, args in gates:
        y = lits[role]
        if kind == "and":
            out.append(ExtendAnd(y, rd(args[0]), rd(args[1])))
        else:
            out.append(ExtendAlias(y, rd(args[0])))
    return out


def bit_equation(lits: dict[int, int], first: bool) -> tuple[PbConstraint, PbConstraint]:
    """``x + z + c − y − 2c' ≥ 0`` and its reverse, over the role literals."""
    if first:
        x, y, z, cn = lits[1], lits[2], lits[5], lits[6]
        terms = [(1, x), (1, z), (-1, y), (-2, cn)]
    else:
        x, y, c, z, cn = lits[1], lits[2], lits[3], lits[9], lits[12]
        terms = [(1, x), (1, z), (1, c), (-1, y), (-2, cn)]
    ge = PbConstraint.geq(terms, 0)
    le = PbConstraint.leq(terms, 0)
    return ge, le


def role_count(first: bool) -> int:
    return len(FIRST_ROLES) if first else len(INTERIOR_ROLES)


# --- gadgets ---------------------------------------------------------------


def lex_aux_count(r: int, strict: bool) -> int:
    adder = len(FIRST_GATES) + len(INTERIOR_GATES) * (r - 1) + 1
    return adder if strict else adder + r + 1


@dataclass(frozen=True)
class LexGadget:
    """A CNF for ``x ≤lex y`` or ``x <lex y`` over auxiliary variables.

    ``x`` and ``y`` are the argument literals as given (``msb_first``
    says which end is most significant).  ``adder`` is the block defining
    ``z``/``c`` from the arguments; it is built on ``(y, x)`` for the
    non-strict gadget, whose ``block`` also defines ``w``.
    """

    r: int
    strict: bool
    msb_first: bool
    x: tuple[int, ...]
    y: tuple[int, ...]
    block: ExtensionBlock
    z: tuple[int, ...]  # z_1 .. z_{r+1}
    carries: tuple[int, ...]  # c_2 .. c_{r+1}
    adder_size: int  # number of block axioms that form the adder
    w: int | None
    extra: tuple[frozenset, ...]

    @property
    def aux(self) -> tuple[int, ...]:
        return self.block.defined

    @property
    def adder(self) -> ExtensionBlock:
        return ExtensionBlock(self.block.base, self.block.axioms[: self.adder_size])

    @property
    def cnf(self) -> tuple[frozenset, ...]:
        return tuple(self.block.clauses()) + self.extra

    def bit_roles(self) -> list[tuple[bool, dict[int, int]]]:
        """Per-bit role assignments of the adder, least significant first."""
        lo_x, lo_y = self._adder_args()
        axioms = self.block.axioms
        out = []
        k = 0
        c = None
        for i in range(self.r):
            first = i == 0
            gates = FIRST_GATES if first else INTERIOR_GATES
            lits = {1: lo_x[i], 2: lo_y[i]}
            if not first:
                lits[3] = c
            for _, role, _ in gates:
                lits[role] = axioms[k].y
                k += 1
            c = lits[role]
            out.append((first, lits))
        return out

    def _adder_args(self) -> tuple[list[int], list[int]]:
        a, b = (self.x, self.y) if self.strict else (self.y, self.x)
        a, b = list(a), list(b)
        if self.msb_first:
            a.reverse()
            b.reverse()
        return a, b


def _build_adder(xs: Sequence[int], ys: Sequence[int], take: Callable[[], int]):
    """Adder axioms for ``x + z = y + 2^r`` (lsb-first literal lists)."""
    r = len(xs)
    axioms: list[Extension] = []
    zs: list[int] = []
    cs: list[int] = []
    c = None
    for i in range(r):
        if i == 0:
            gates, lits = FIRST_GATES, {1: xs[0], 2: ys[0]}
        else:
            gates, lits = INTERIOR_GATES, {1: xs[i], 2: ys[i], 3: c}
        for _, role, _ in gates:
            lits[role] = take()
        axioms += bit_axioms(gates, lits)
        zs.append(lits[5] if i == 0 else lits[9])
        c = lits[6] if i == 0 else lits[12]
        cs.append(c)
    top = take()
    axioms.append(ExtendAlias(top, -c))  # z_{r+1} = ¬c_{r+1}
    zs.append(top)
    return axioms, zs, cs


def gen_lex(
    r: int,
    strict: bool = False,
    msb_first: bool = True,
    x: Sequence[int] | None = None,
    y: Sequence[int] | None = None,
    aux: Sequence[int] | None = None,
    fresh: FreshVars | None = None,
) -> LexGadget:
    """``[x <lex y]`` (strict) or ``[x ≤lex y]`` as a :class:`LexGadget`.

    Arguments default to variables ``1..r`` and ``r+1..2r``.  Auxiliary
    variables come from ``aux`` when given (exactly
    :func:`lex_aux_count` of them), else from ``fresh``, else above every
    argument variable.
    """
    if r < 1:
        raise ValueError("arity must be at least 1")
    x = tuple(range(1, r + 1)) if x is None else tuple(x)
    y = tuple(range(r + 1, 2 * r + 1)) if y is None else tuple(y)
    if len(x) != r or len(y) != r:
        raise ValueError(f"arguments must have {r} literals")
    need = lex_aux_count(r, strict)
    if aux is not None:
        aux = list(aux)
        if len(aux) != need:
            raise ValueError(f"gadget needs {need} auxiliary variables, got {len(aux)}")
        if len(set(aux)) != need or any(v <= 0 or is_const(v) for v in aux):
            raise ValueError("auxiliary variables must be distinct variables")
        it = iter(aux)
        take = it.__next__
    else:
        if fresh is None:
            fresh = FreshVars.above([var(l) for l in x + y if not is_const(l)])
        take = fresh

    a, b = (x, y) if strict else (y, x)
    lo_a, lo_b = (a[::-1], b[::-1]) if msb_first else (a, b)
    axioms, zs, cs = _build_adder(lo_a, lo_b, take)
    adder_size = len(axioms)
    w = None
    if strict:
        extra = (frozenset([zs[-1]]), frozenset(zs[:-1]))
    else:
        # n_k = ¬(z_1 ∨ … ∨ z_k);  w = z_{r+1} ∧ ¬n_r
        n = take()
        axioms.append(ExtendAlias(n, -zs[0]))
        for k in range(1, r):
            nxt = take()
            axioms.append(ExtendAnd(nxt, n, -zs[k]))
            n = nxt
        w = take()
        axioms.append(ExtendAnd(w, zs[-1], -n))
        extra = (frozenset([-w]),)
    base = frozenset(var(l) for l in x + y if not is_const(l))
    block = ExtensionBlock(base, tuple(axioms))
    return LexGadget(r, strict, msb_first, x, y, block, tuple(zs), tuple(cs), adder_size, w, extra)


def gen_L_strict(r: int, x: Sequence[int] | None = None, y: Sequence[int] | None = None) -> PbConstraint:
    """``Σ 2^(i-1) x_i < Σ 2^(i-1) y_i`` with lsb-first arguments."""
    if r < 1:
        raise ValueError("arity must be at least 1")
    x = tuple(range(1, r + 1)) if x is None else tuple(x)
    y = tuple(range(r + 1, 2 * r + 1)) if y is None else tuple(y)
    terms = [(1 << i, y[i]) for i in range(r)] + [(-(1 << i), x[i]) for i in range(r)]
    return PbConstraint.geq(terms, 1)


def lex_weights(n: int) -> tuple[int, ...]:
    """Coefficients ``2^(n-j)`` making the first variable most significant."""
    return tuple(1 << (n - 1 - j) for j in range(n))


# --- Lemma-style CP derivation --------------------------------------------


def _template_steps(first: bool, direction: str):
    from .templates import TEMPLATES

    return TEMPLATES["first" if first else "interior"][direction]


def derive_L_into(
    b: CpBuilder, gadget: LexGadget, hyp_step: Callable[[frozenset], int]
) -> int:
    """Derive ``L_<`` for a strict gadget inside ``b``.

    ``hyp_step(clause)`` returns a step holding ``clause*`` for each
    clause of ``gadget.cnf``.  Returns the step of ``L_<`` (lsb-first, so
    for an msb-first gadget it is the lexicographic strict comparison).
    """
    if not gadget.strict:
        raise ValueError("need a strict gadget")
    r = gadget.r
    acc = None
    for i, (first, lits) in enumerate(gadget.bit_roles()):
        gates = FIRST_GATES if first else INTERIOR_GATES
        roles = [c for ax in bit_axioms(gates, _ROLE_IDS) for c in axiom_clauses(ax)]
        sigma = _role_sub(lits)

        def hyp(j: int, roles=roles, sigma=sigma) -> int:
            # Repeated arguments merge literals in the image clause, so its
            # PB form can be weaker than the substituted role constraint.
            at = hyp_step(sub_clause(sigma, roles[j]))
            want = clause_to_pb(roles[j]).substitute(sigma)
            return at if b[at] == want else b.weaken_to(at, want)

        steps = instantiate_into(b, _template_steps(first, "le"), sigma, hyp)
        eq = steps[-1]
        acc = b.scale(eq, 1 << i) if acc is None else b.add(acc, 1, eq, 1 << i)
    zs = gadget.z
    top = zs[-1]
    c_top = gadget.carries[-1]
    # z_{r+1} = ¬c_{r+1}: the clause ¬z_{r+1} ∨ ¬c_{r+1} is  z + c ≤ 1
    alias_clause = frozenset((-top, -c_top))
    acc = b.add(acc, 1, hyp_step(alias_clause), 1 << r)
    unit = hyp_step(frozenset([top]))
    acc = b.add(acc, 1, unit, 1 << r)
    low = hyp_step(frozenset(zs[:-1]))
    raised = b.add_lit_axioms(low, [(l, (1 << i) - 1) for i, l in enumerate(zs[:-1])])
    acc = b.add(acc, 1, raised, 1)
    lo_x, lo_y = gadget._adder_args()
    target = gen_L_strict(r, lo_x, lo_y)
    assert b[acc] == target, (b[acc], target)
    return acc


_ROLE_IDS = {r: r for r in range(1, len(INTERIOR_ROLES) + 1)}


def _role_sub(lits: dict[int, int]) -> Substitution:
    return Substitution({role: lit for role, lit in lits.items()})


def derive_L_from_P(r: int) -> CpDerivation:
    """``P_<(x, y)* ⊢ L_<(x, y)`` for the reverse-lex gadget on ``1..2r``."""
    g = gen_lex(r, strict=True, msb_first=False)
    hyps = cnf_to_pb(g.cnf)
    b = CpBuilder(hyps)
    derive_L_into(b, g, lambda c: b.hyp_of(clause_to_pb(c)))
    return b.derivation([gen_L_strict(r)])


# --- strictification -------------------------------------------------------


def strictify(pi: ErDerivation, gadget: LexGadget) -> ErDerivation:
    """From ``Γ ∧ [x ≤lex y] ⊢ ⊥`` build ``Γ ⊢ [y <lex x]``.

    ``pi`` must list the clauses of ``gadget`` (non-strict) among its
    premises.  The output introduces the gadget's adder and the
    definitions of ``w`` as extensions, turns the refutation into a
    derivation of ``w`` and unpacks ``w`` into ``z_{r+1}`` and ``⋁ z_i``.
    Its conclusions are the clauses of ``gen_lex(r, strict=True)`` on the
    swapped arguments with the same auxiliaries.
    """
    if gadget.strict:
        raise ValueError("need a non-strict gadget")
    gcls = set(gadget.cnf)
    missing = [c for c in gadget.cnf if c not in set(pi.premises)]
    if missing:
        raise ValueError("derivation does not contain the gadget among its premises")
    w = gadget.w
    base = [c for c in pi.premises if c not in gcls]
    # Stage 1: Γ ∧ ¬w with the gadget block introduced by extension steps.
    stage = ResolutionBuilder(base + [frozenset([-w])], pi.protected)
    for ax in gadget.block.axioms:
        stage.extend(ax)
    remap: list[int] = []
    for s in pi.steps:
        if isinstance(s, Premise):
            remap.append(stage.use(pi.premises[s.index]))
        elif isinstance(s, EXTENSIONS):
            remap.extend(stage.extend(s))
        elif isinstance(s, Resolve):
            remap.append(stage.resolve(remap[s.a], remap[s.b], s.pivot))
        elif isinstance(s, Weaken):
            remap.append(stage.weaken(remap[s.a], s.result))
        else:
            remap.append(stage.drop_zero(remap[s.a]))
    refutation = stage.derivation([frozenset()])
    # Stage 2: Γ ⊢ w, then unpack.
    got = refutation_to_derivation(refutation, w)
    b = ResolutionBuilder(got.premises, got.protected)
    for s in got.steps:
        replay(b, s)
    w_unit = b.use(frozenset([w]))
    zs = gadget.z
    r = gadget.r
    n_axioms = gadget.block.axioms[gadget.adder_size:]
    w_ax = n_axioms[-1]
    top = b.resolve(w_unit, b.use(frozenset((-w, zs[-1]))), w)
    cur = b.resolve(w_unit, b.use(frozenset((-w, w_ax.v))), w)  # ¬n_r
    for ax in reversed(n_axioms[:-1]):
        defining = b.use(axiom_clauses(ax)[0])
        cur = b.resolve(defining, cur, ax.y)
    strict = gen_lex(r, strict=True, msb_first=gadget.msb_first, x=gadget.y, y=gadget.x,
                     aux=list(gadget.aux[: gadget.adder_size]))
    assert b.clause(top) == strict.extra[0] and b.clause(cur) == strict.extra[1]
    return b.derivation(strict.cnf)
