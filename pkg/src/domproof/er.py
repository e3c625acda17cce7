"""Extended resolution: derivations, extension blocks, circuits, transformers.

A derivation lists its premises explicitly and refers to clauses by a flat
running index over the clauses its steps produce.  ``Premise(i)`` produces
premise ``i``; an ``ExtendAnd`` produces three clauses, an ``ExtendAlias``
two and an ``ExtendConst`` one, in the order given by :func:`axiom_clauses`.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Sequence, Union

from .core import (
    ONE,
    ZERO,
    FreshVars,
    check_literal,
    clause_vars,
    cnf_vars,
    format_clause,
    is_const,
    var,
)
from .errors import ProofRejected

# --- steps -----------------------------------------------------------------


@dataclass(frozen=True)
class Premise:
    index: int


@dataclass(frozen=True)
class Resolve:
    a: int
    b: int
    pivot: int
    result: frozenset


@dataclass(frozen=True)
class Weaken:
    a: int
    result: frozenset


@dataclass(frozen=True)
class DropZero:
    a: int
    result: frozenset


@dataclass(frozen=True)
class ExtendAnd:
    y: int
    u: int
    v: int


@dataclass(frozen=True)
class ExtendAlias:
    y: int
    u: int


@dataclass(frozen=True)
class ExtendConst:
    y: int
    bit: int


Extension = Union[ExtendAnd, ExtendAlias, ExtendConst]
ErStep = Union[Premise, Resolve, Weaken, DropZero, ExtendAnd, ExtendAlias, ExtendConst]
EXTENSIONS = (ExtendAnd, ExtendAlias, ExtendConst)


def axiom_clauses(ax: Extension) -> list[frozenset]:
    if isinstance(ax, ExtendAnd):
        y, u, v = ax.y, ax.u, ax.v
        return [frozenset((-u, -v, y)), frozenset((-y, u)), frozenset((-y, v))]
    if isinstance(ax, ExtendAlias):
        return [frozenset((-ax.u, ax.y)), frozenset((-ax.y, ax.u))]
    if isinstance(ax, ExtendConst):
        return [frozenset((ax.y if ax.bit else -ax.y,))]
    raise TypeError(f"not an extension axiom: {ax!r}")


def axiom_inputs(ax: Extension) -> tuple[int, ...]:
    if isinstance(ax, ExtendAnd):
        return (ax.u, ax.v)
    if isinstance(ax, ExtendAlias):
        return (ax.u,)
    return ()


def axiom_value(ax: Extension, value_of) -> int:
    """Value forced on ``ax.y`` given a 0/1 valuation of its input literals."""
    if isinstance(ax, ExtendAnd):
        return value_of(ax.u) & value_of(ax.v)
    if isinstance(ax, ExtendAlias):
        return value_of(ax.u)
    return 1 if ax.bit else 0


def rename_step(step: ErStep, m) -> ErStep:
    if isinstance(step, Premise):
        return step
    if isinstance(step, Resolve):
        return Resolve(step.a, step.b, m(step.pivot), frozenset(map(m, step.result)))
    if isinstance(step, (Weaken, DropZero)):
        return type(step)(step.a, frozenset(map(m, step.result)))
    if isinstance(step, ExtendAnd):
        return ExtendAnd(m(step.y), m(step.u), m(step.v))
    if isinstance(step, ExtendAlias):
        return ExtendAlias(m(step.y), m(step.u))
    return ExtendConst(m(step.y), step.bit)


def _literal_map(mapping: Mapping[int, int]):
    def m(lit: int) -> int:
        if is_const(lit):
            return lit
        if lit > 0:
            return mapping.get(lit, lit)
        return -mapping.get(-lit, -lit)

    return m


# --- derivations -----------------------------------------------------------


@dataclass(frozen=True)
class ErDerivation:
    premises: tuple[frozenset, ...]
    steps: tuple[ErStep, ...]
    conclusions: tuple[frozenset, ...] = ()
    protected: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(frozenset(c) for c in self.premises))
        object.__setattr__(self, "steps", tuple(self.steps))
        object.__setattr__(self, "conclusions", tuple(frozenset(c) for c in self.conclusions))
        object.__setattr__(self, "protected", frozenset(self.protected))

    def __len__(self) -> int:
        return len(self.steps)

    def size(self) -> int:
        """Number of literal occurrences over every produced clause."""
        return sum(len(c) for c in derived_clauses(self))

    def extensions(self) -> list[Extension]:
        return [s for s in self.steps if isinstance(s, EXTENSIONS)]

    def extension_vars(self) -> list[int]:
        return [s.y for s in self.extensions()]

    def all_vars(self) -> set[int]:
        out = cnf_vars(self.premises) | cnf_vars(self.conclusions) | set(self.protected)
        for s in self.steps:
            if isinstance(s, EXTENSIONS):
                out.add(s.y)
                out.update(var(l) for l in axiom_inputs(s) if not is_const(l))
            elif not isinstance(s, Premise):
                out |= clause_vars(s.result)
        return out

    def rename(self, mapping: Mapping[int, int]) -> "ErDerivation":
        m = _literal_map(mapping)
        return ErDerivation(
            tuple(frozenset(map(m, c)) for c in self.premises),
            tuple(rename_step(s, m) for s in self.steps),
            tuple(frozenset(map(m, c)) for c in self.conclusions),
            frozenset(var(m(v)) for v in self.protected),
        )

    def is_resolution_only(self) -> bool:
        return not any(isinstance(s, EXTENSIONS) for s in self.steps)


def derived_clauses(pi: ErDerivation) -> list[frozenset]:
    """Produced clauses in index order, without checking anything."""
    out: list[frozenset] = []
    for s in pi.steps:
        if isinstance(s, Premise):
            out.append(pi.premises[s.index])
        elif isinstance(s, EXTENSIONS):
            out.extend(axiom_clauses(s))
        else:
            out.append(s.result)
    return out


def _fetch(produced: list, idx: int, k: int) -> frozenset:
    if not 0 <= idx < len(produced):
        raise ProofRejected(f"clause index {idx} is not an earlier clause", k)
    return produced[idx]


def check_er(pi: ErDerivation) -> list[frozenset]:
    """Verify ``pi`` and return its produced clauses.

    Raises :class:`ProofRejected` at the first bad step, or with ``step=None``
    when a conclusion is never derived.
    """
    seen = cnf_vars(pi.premises) | set(pi.protected)
    produced: list[frozenset] = []
    for k, s in enumerate(pi.steps):
        if isinstance(s, Premise):
            if not 0 <= s.index < len(pi.premises):
                raise ProofRejected(f"no premise {s.index}", k, "premise")
            produced.append(pi.premises[s.index])
        elif isinstance(s, Resolve):
            a = _fetch(produced, s.a, k)
            b = _fetch(produced, s.b, k)
            p = s.pivot
            if is_const(p):
                raise ProofRejected("pivot must be a variable literal", k, "resolve")
            if p not in a or -p not in b:
                raise ProofRejected(
                    f"pivot {p} does not clash: [{format_clause(a)}] vs [{format_clause(b)}]", k, "resolve"
                )
            expect = (a - {p}) | (b - {-p})
            if frozenset(s.result) != expect:
                raise ProofRejected(f"resolvent should be [{format_clause(expect)}]", k, "resolve")
            produced.append(expect)
        elif isinstance(s, Weaken):
            a = _fetch(produced, s.a, k)
            if not a <= s.result:
                raise ProofRejected("weakening must keep every literal", k, "weaken")
            fresh = clause_vars(s.result - a) - seen
            if fresh:
                raise ProofRejected(f"weakening introduces unseen variables {sorted(fresh)}", k, "weaken")
            produced.append(frozenset(s.result))
        elif isinstance(s, DropZero):
            a = _fetch(produced, s.a, k)
            if ZERO not in a or frozenset(s.result) != a - {ZERO}:
                raise ProofRejected("must remove exactly the constant 0", k, "drop-zero")
            produced.append(frozenset(s.result))
        elif isinstance(s, EXTENSIONS):
            y = s.y
            if y <= 0 or is_const(y):
                raise ProofRejected(f"extension variable {y} is not a variable", k, "extend")
            if y in seen:
                raise ProofRejected(f"extension variable x{y} is not fresh", k, "extend")
            for u in axiom_inputs(s):
                check_literal(u)
                if not is_const(u) and var(u) not in seen:
                    raise ProofRejected(f"extension input x{var(u)} is unseen", k, "extend")
            if isinstance(s, ExtendConst) and s.bit not in (0, 1):
                raise ProofRejected("constant must be 0 or 1", k, "extend")
            seen.add(y)
            produced.extend(axiom_clauses(s))
        else:
            raise ProofRejected(f"unknown step {s!r}", k)
        if not isinstance(s, EXTENSIONS):
            seen |= clause_vars(produced[-1])
    have = set(pi.premises) | set(produced)
    for c in pi.conclusions:
        if c not in have:
            raise ProofRejected(f"conclusion [{format_clause(c)}] is never derived")
    return produced


def is_valid_er(pi: ErDerivation) -> bool:
    try:
        check_er(pi)
    except ProofRejected:
        return False
    return True


# --- extension blocks and circuits -----------------------------------------


@dataclass(frozen=True)
class ExtensionBlock:
    """Ordered extension axioms defining ``defined`` from ``base``."""

    base: frozenset
    axioms: tuple[Extension, ...] = ()
    output: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "base", frozenset(self.base))
        object.__setattr__(self, "axioms", tuple(self.axioms))

    @property
    def defined(self) -> tuple[int, ...]:
        return tuple(ax.y for ax in self.axioms)

    def clauses(self) -> list[frozenset]:
        return [c for ax in self.axioms for c in axiom_clauses(ax)]

    def __len__(self) -> int:
        return len(self.axioms)

    def validate(self) -> None:
        """Raise ``ValueError`` unless each axiom uses only earlier symbols."""
        known = set(self.base)
        for i, ax in enumerate(self.axioms):
            if not isinstance(ax, EXTENSIONS):
                raise ValueError(f"axiom {i} is not an extension axiom")
            if ax.y in known:
                raise ValueError(f"axiom {i} redefines x{ax.y}")
            for u in axiom_inputs(ax):
                if not is_const(u) and var(u) not in known:
                    raise ValueError(f"axiom {i} uses x{var(u)} before it is defined")
            known.add(ax.y)
        if self.output is not None and self.output not in self.defined:
            raise ValueError("output is not a defined variable")

    def is_valid(self) -> bool:
        try:
            self.validate()
        except ValueError:
            return False
        return True

    def evaluate(self, values: Mapping[int, int]) -> dict[int, int]:
        """The unique extension of a 0/1 base valuation to the defined vars."""
        vals = dict(values)

        def val(lit: int) -> int:
            if lit == ONE:
                return 1
            if lit == ZERO:
                return 0
            return vals[lit] if lit > 0 else 1 - vals[-lit]

        for ax in self.axioms:
            vals[ax.y] = axiom_value(ax, val)
        return {y: vals[y] for y in self.defined}

    def rename(self, mapping: Mapping[int, int]) -> "ExtensionBlock":
        m = _literal_map(mapping)
        return ExtensionBlock(
            frozenset(var(m(v)) for v in self.base),
            tuple(rename_step(ax, m) for ax in self.axioms),
            None if self.output is None else m(self.output),
        )


@dataclass(frozen=True)
class Gate:
    op: str  # "and", "not", "buf" or "const"
    args: tuple[int, ...]


@dataclass(frozen=True)
class CircuitDesc:
    """Fan-in ≤ 2 circuit over signed node references.

    Nodes ``1..n_inputs`` are the inputs; gate ``j`` (0-based) is node
    ``n_inputs + j + 1``.  A negative reference reads the negated node.
    """

    n_inputs: int
    gates: tuple[Gate, ...]
    output: int | None = None
    outputs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        for j, g in enumerate(self.gates):
            node = self.n_inputs + j + 1
            if g.op == "const":
                if g.args not in ((0,), (1,)):
                    raise ValueError(f"gate {j}: const takes a single 0/1 argument")
                continue
            arity = {"and": 2, "not": 1, "buf": 1}.get(g.op)
            if arity is None or len(g.args) != arity:
                raise ValueError(f"gate {j}: bad gate {g}")
            for a in g.args:
                if a == 0 or abs(a) >= node:
                    raise ValueError(f"gate {j}: reference {a} is not an earlier node")
        for o in ((self.output,) if self.output is not None else ()) + self.outputs:
            if not 0 < o <= self.n_inputs + len(self.gates):
                raise ValueError(f"output {o} is not a node")

    @property
    def n_nodes(self) -> int:
        return self.n_inputs + len(self.gates)

    def evaluate(self, inputs: Sequence[int], width: int = 1) -> list[int]:
        """Bit-sliced evaluation: each input is a ``width``-bit word.

        Returns the word of every node (index 0 unused).
        """
        if len(inputs) != self.n_inputs:
            raise ValueError(f"expected {self.n_inputs} inputs, got {len(inputs)}")
        mask = (1 << width) - 1
        vals = [0] + [x & mask for x in inputs]

        def rd(ref: int) -> int:
            return vals[ref] if ref > 0 else vals[-ref] ^ mask

        for g in self.gates:
            if g.op == "and":
                vals.append(rd(g.args[0]) & rd(g.args[1]))
            elif g.op == "not":
                vals.append(rd(g.args[0]) ^ mask)
            elif g.op == "buf":
                vals.append(rd(g.args[0]))
            else:
                vals.append(mask if g.args[0] else 0)
        return vals

    def evaluate_outputs(self, inputs: Sequence[int], width: int = 1) -> list[int]:
        vals = self.evaluate(inputs, width)
        return [vals[o] for o in self.outputs]

    def __call__(self, bits: Sequence[int]) -> int:
        if self.output is None:
            raise ValueError("circuit has no output")
        return self.evaluate(bits)[self.output]


class CircuitBuilder:
    """Build a :class:`CircuitDesc`; OR and XOR are expanded into ANDs."""

    def __init__(self, n_inputs: int):
        self.n_inputs = n_inputs
        self.gates: list[Gate] = []
        self._consts: dict[int, int] = {}
        self._memo: dict[tuple, int] = {}

    def inputs(self) -> list[int]:
        return list(range(1, self.n_inputs + 1))

    def _gate(self, op: str, *args: int) -> int:
        key = (op, args)
        if key in self._memo:
            return self._memo[key]
        self.gates.append(Gate(op, args))
        node = self.n_inputs + len(self.gates)
        self._memo[key] = node
        return node

    def const(self, bit: int) -> int:
        if bit not in self._consts:
            self._consts[bit] = self._gate("const", bit)
        return self._consts[bit]

    def and_(self, a: int, b: int) -> int:
        return self._gate("and", a, b)

    def or_(self, a: int, b: int) -> int:
        return -self.and_(-a, -b)

    def xor(self, a: int, b: int) -> int:
        return self.or_(self.and_(a, -b), self.and_(-a, b))

    def mux(self, sel: int, hi: int, lo: int) -> int:
        return self.or_(self.and_(sel, hi), self.and_(-sel, lo))

    def all_(self, refs: Sequence[int]) -> int:
        if not refs:
            return self.const(1)
        acc = refs[0]
        for r in refs[1:]:
            acc = self.and_(acc, r)
        return acc

    def any_(self, refs: Sequence[int]) -> int:
        return -self.all_([-r for r in refs]) if refs else self.const(0)

    def node(self, ref: int) -> int:
        """A positive node equal to ``ref`` (adds a NOT gate for negations)."""
        return ref if ref > 0 else self._gate("not", -ref)

    def build(self, output: int | None = None, outputs: Sequence[int] = ()) -> CircuitDesc:
        if output is not None:
            output = self.node(output)
        outs = tuple(self.node(o) for o in outputs)
        return CircuitDesc(self.n_inputs, tuple(self.gates), output, outs)


def circuit_axioms(circuit: CircuitDesc, xs: Sequence[int], fresh: FreshVars | None = None) -> ExtensionBlock:
    """``[ȳ = C(x̄)]``: one extension variable per gate, in gate order."""
    xs = list(xs)
    if len(xs) != circuit.n_inputs:
        raise ValueError(f"circuit takes {circuit.n_inputs} inputs, got {len(xs)}")
    if fresh is None:
        fresh = FreshVars.above(xs)
    lit = [0] + xs

    def rd(ref: int) -> int:
        return lit[ref] if ref > 0 else -lit[-ref]

    axioms: list[Extension] = []
    for g in circuit.gates:
        y = fresh()
        if g.op == "and":
            axioms.append(ExtendAnd(y, rd(g.args[0]), rd(g.args[1])))
        elif g.op == "not":
            axioms.append(ExtendAlias(y, -rd(g.args[0])))
        elif g.op == "buf":
            axioms.append(ExtendAlias(y, rd(g.args[0])))
        else:
            axioms.append(ExtendConst(y, g.args[0]))
        lit.append(y)
    out = None if circuit.output is None else lit[circuit.output]
    return ExtensionBlock(frozenset(xs), tuple(axioms), out)


# --- building derivations --------------------------------------------------


class ResolutionBuilder:
    """Incrementally emit ER steps while tracking produced clauses."""

    def __init__(self, premises: Iterable[Iterable[int]], protected: Iterable[int] = ()):
        self.premises = tuple(frozenset(c) for c in premises)
        self.protected = frozenset(protected)
        self.steps: list[ErStep] = []
        self.clauses: list[frozenset] = []
        self._where: dict[frozenset, int] = {}
        self._premise_at = {}
        for i, c in enumerate(self.premises):
            self._premise_at.setdefault(c, i)

    def __len__(self) -> int:
        return len(self.clauses)

    def _push(self, step: ErStep, produced: Sequence[frozenset]) -> int:
        self.steps.append(step)
        for c in produced:
            self._where.setdefault(c, len(self.clauses))
            self.clauses.append(c)
        return len(self.clauses) - 1

    def find(self, c: Iterable[int]) -> int | None:
        return self._where.get(frozenset(c))

    def clause(self, idx: int) -> frozenset:
        return self.clauses[idx]

    def premise(self, i: int) -> int:
        return self._push(Premise(i), [self.premises[i]])

    def use(self, c: Iterable[int]) -> int:
        """Index of ``c``, emitting a Premise step the first time if needed."""
        c = frozenset(c)
        idx = self._where.get(c)
        if idx is not None:
            return idx
        if c in self._premise_at:
            return self.premise(self._premise_at[c])
        raise KeyError(f"clause [{format_clause(c)}] is neither derived nor a premise")

    def resolve(self, a: int, b: int, pivot: int | None = None) -> int:
        ca, cb = self.clauses[a], self.clauses[b]
        if pivot is None:
            cands = [l for l in ca if not is_const(l) and -l in cb]
            if len(cands) != 1:
                raise ValueError(f"ambiguous or missing pivot between clauses {a} and {b}")
            pivot = cands[0]
        result = (ca - {pivot}) | (cb - {-pivot})
        return self._push(Resolve(a, b, pivot, result), [result])

    def weaken(self, a: int, target: Iterable[int]) -> int:
        target = frozenset(target) | self.clauses[a]
        if target == self.clauses[a]:
            return a
        return self._push(Weaken(a, target), [target])

    def drop_zero(self, a: int) -> int:
        c = self.clauses[a]
        if ZERO not in c:
            return a
        return self._push(DropZero(a, c - {ZERO}), [c - {ZERO}])

    def extend(self, ax: Extension) -> list[int]:
        cs = axiom_clauses(ax)
        last = self._push(ax, cs)
        return list(range(last - len(cs) + 1, last + 1))

    def derive_by_cases(
        self, available: Sequence[int], target: Iterable[int], order: Sequence[int] | None = None
    ) -> int:
        """Derive ``target`` from a few clauses by a tree-like refutation.

        Branches on the variables of ``available`` not fixed by falsifying
        ``target``, in ``order`` if given; a branch whose clause does not
        mention the branch variable is reused as is.
        """
        target = frozenset(target)
        pool = [self.drop_zero(i) for i in available]
        pool = [i for i in pool if ONE not in self.clauses[i]]
        rho = {-l for l in target if not is_const(l)}
        free = {var(l) for i in pool for l in self.clauses[i] if not is_const(l)} - {var(l) for l in rho}
        if order is None:
            vs = sorted(free)
        else:
            vs = [v for v in order if v in free] + sorted(free - set(order))
        got = self._refute(pool, rho, vs)
        if got is None:
            raise ValueError(f"target [{format_clause(target)}] does not follow")
        return self.weaken(got, target)

    def _refute(self, pool, rho: set, vs: list) -> int | None:
        for i in pool:
            if all(-l in rho for l in self.clauses[i]):
                return i
        if not vs:
            return None
        x, rest = vs[0], vs[1:]
        pos = self._refute(pool, rho | {x}, rest)
        if pos is None:
            return None
        if -x not in self.clauses[pos]:
            return pos
        negb = self._refute(pool, rho | {-x}, rest)
        if negb is None:
            return None
        if x not in self.clauses[negb]:
            return negb
        return self.resolve(negb, pos, x)

    def derivation(self, conclusions: Iterable[Iterable[int]] = (), premises=None) -> ErDerivation:
        return ErDerivation(
            self.premises if premises is None else premises,
            tuple(self.steps),
            tuple(frozenset(c) for c in conclusions),
            self.protected,
        )


# --- transformers ----------------------------------------------------------


def _produced_index(pi: ErDerivation) -> dict[frozenset, int]:
    where: dict[frozenset, int] = {}
    for i, c in enumerate(derived_clauses(pi)):
        where.setdefault(c, i)
    return where


def compose_er(pi1: ErDerivation, pi2: ErDerivation, keep: Iterable[int] = ()) -> ErDerivation:
    """Chain ``pi1 : Γ∧A ⊢ B`` with ``pi2 : Γ∧B ⊢ Δ`` into ``Γ∧A ⊢ Δ``.

    Extension variables of ``pi2`` other than ``keep`` are renamed fresh;
    those in ``keep`` must not occur anywhere in ``pi1``.
    """
    keep = set(keep)
    ext2 = pi2.extension_vars()
    clash = keep & set(ext2) & pi1.all_vars()
    if clash:
        raise ValueError(f"kept extension variables {sorted(clash)} occur in the first derivation")
    fresh = FreshVars.above(pi1.all_vars(), pi2.all_vars())
    pi2 = pi2.rename({y: fresh() for y in ext2 if y not in keep})

    b = ResolutionBuilder(pi1.premises, pi1.protected | pi2.protected)
    for s in pi1.steps:
        replay(b, s)
    remap: list[int] = []
    for s in pi2.steps:
        if isinstance(s, Premise):
            remap.append(b.use(pi2.premises[s.index]))
        elif isinstance(s, EXTENSIONS):
            remap.extend(b.extend(s))
        else:
            remap.append(replay(b, s, remap))
    return b.derivation(pi2.conclusions)


def replay(b: ResolutionBuilder, s: ErStep, remap: list[int] | None = None) -> int:
    """Re-emit a step; ``remap`` translates clause indices when given."""
    r = (lambda i: remap[i]) if remap is not None else (lambda i: i)
    if isinstance(s, Premise):
        return b._push(s, [b.premises[s.index]])
    if isinstance(s, EXTENSIONS):
        return b.extend(s)[-1]
    if isinstance(s, Resolve):
        return b._push(Resolve(r(s.a), r(s.b), s.pivot, s.result), [s.result])
    return b._push(type(s)(r(s.a), s.result), [s.result])


def pull_conclusions(pi1: ErDerivation, block: ExtensionBlock) -> ErDerivation:
    """From ``pi1 : Γ ⊢ Δ∧A`` build ``Γ∧Δ ⊢ Δ∧A`` with Δ as premises.

    The defined variables ȳ are renamed to fresh z̄ in a copy of ``pi1``;
    equivalences ``y_i ↔ z_i`` are then derived in block order and used to
    turn the renamed clauses of A back into A.
    """
    block.validate()
    delta = block.clauses()
    if not block.axioms:
        return replace(pi1, conclusions=tuple(pi1.conclusions))
    ys = block.defined
    fresh = FreshVars.above(pi1.all_vars(), ys)
    ren = {y: fresh() for y in ys}
    copy = pi1.rename(ren)
    m = _literal_map(ren)

    premises = tuple(pi1.premises) + tuple(delta)
    b = ResolutionBuilder(premises, pi1.protected)
    for s in copy.steps:
        replay(b, s)

    equiv: dict[int, int] = {}  # literal ℓ' over z̄ -> index of clause ¬ℓ' ∨ ℓ
    for ax in block.axioms:
        y, z = ax.y, ren[ax.y]
        mine = [b.use(c) for c in axiom_clauses(ax)]
        theirs = [b.use(frozenset(map(m, c))) for c in axiom_clauses(ax)]
        helpers = []
        for u in axiom_inputs(ax):
            if not is_const(u) and var(u) in ren:
                helpers += _equiv_pair(equiv, m(u))
        avail = mine + theirs + helpers
        equiv[z] = b.derive_by_cases(avail, (-z, y))
        equiv[-z] = b.derive_by_cases(avail, (z, -y))

    zset = set(ren.values())
    for c in pi1.conclusions:
        if c in delta:
            b.use(c)
            continue
        idx = b.use(frozenset(map(m, c)))
        while True:
            zs = sorted(l for l in b.clause(idx) if not is_const(l) and var(l) in zset)
            if not zs:
                break
            idx = b.resolve(idx, equiv[zs[0]], zs[0])
    return b.derivation(pi1.conclusions)


def _equiv_pair(equiv: dict[int, int], lit: int) -> list[int]:
    return [equiv[lit], equiv[-lit]]


def hoist_extensions(pi: ErDerivation) -> tuple[ErDerivation, ExtensionBlock]:
    """Move every extension axiom of ``pi`` into its premises.

    Clause indices are unchanged: each extension step becomes Premise
    steps for its clauses, which are appended to the premise list.
    """
    axioms = pi.extensions()
    if not axioms:
        return pi, ExtensionBlock(frozenset(cnf_vars(pi.premises) | set(pi.protected)))
    premises = list(pi.premises)
    steps: list[ErStep] = []
    for s in pi.steps:
        if isinstance(s, EXTENSIONS):
            for c in axiom_clauses(s):
                steps.append(Premise(len(premises)))
                premises.append(c)
        else:
            steps.append(s)
    block = ExtensionBlock(frozenset(cnf_vars(pi.premises) | set(pi.protected)), tuple(axioms))
    return ErDerivation(tuple(premises), tuple(steps), pi.conclusions, pi.protected), block


def refutation_to_derivation(pi: ErDerivation, z: int) -> ErDerivation:
    """Turn a refutation of ``Γ ∧ ¬z`` into a derivation ``Γ ⊢ z``.

    Every produced clause C becomes C or C ∨ z.  A resolution on z is
    replaced by weakening the parent that holds z; a use of the premise
    ¬z becomes the tautology z ∨ ¬z, obtained from a throwaway alias.
    """
    unit = frozenset([-z])
    if unit not in pi.premises:
        raise ValueError(f"¬x{z} is not a premise")
    produced = derived_clauses(pi)
    if frozenset() not in produced and frozenset() not in pi.premises:
        raise ValueError("derivation never reaches the empty clause")
    premises = tuple(c for c in pi.premises if c != unit)
    new_index = {}
    for i, c in enumerate(pi.premises):
        if c != unit:
            new_index[i] = premises.index(c)
    fresh = FreshVars.above(pi.all_vars(), [z])
    # z must count as seen for the weakenings, unless π itself defines it
    protect = set(pi.protected)
    if z not in pi.extension_vars():
        protect.add(z)
    b = ResolutionBuilder(premises, protect)
    out: list[int] = []
    taut = None

    for s in pi.steps:
        if isinstance(s, Premise):
            if pi.premises[s.index] == unit:
                if taut is None:
                    t = fresh()
                    first, second = b.extend(ExtendAlias(t, z))
                    taut = b.resolve(first, second, t)
                out.append(taut)
            else:
                out.append(b.premise(new_index[s.index]))
        elif isinstance(s, EXTENSIONS):
            out.extend(b.extend(s))
        elif isinstance(s, Resolve):
            ta, tb = out[s.a], out[s.b]
            if var(s.pivot) == z:
                holder = ta if s.pivot == z else tb
                out.append(b.weaken(holder, s.result | {z}))
            else:
                out.append(b.resolve(ta, tb, s.pivot))
        elif isinstance(s, Weaken):
            ta = out[s.a]
            out.append(b.weaken(ta, s.result | b.clause(ta)))
        else:  # DropZero
            out.append(b.drop_zero(out[s.a]))

    goal = frozenset([z])
    bottom = produced.index(frozenset()) if frozenset() in produced else None
    if bottom is None:
        last = b.use(frozenset())
    else:
        last = out[bottom]
    b.weaken(last, goal)
    return b.derivation([goal])
