"""Line-oriented text formats for formulas and proofs.

Literals are DIMACS integers, with ``t`` and ``f`` standing for the
constants 1 and 0.  PB constraints are written OPB-style::

    +1 x1 +1 ~x2 >= 1 ;

and the empty left-hand side is written ``0``.  Proofs are made of
``begin <kind>`` … ``end`` blocks whose lines each start with a keyword::

    begin er                     begin cp
    premise 1 2 0                hyp +1 x1 >= 1 ;
    protected 3 4                axge 2
    p 0 0                        add 0 1 1 1
    r 0 1 2 1 0                  div 2 2
    e2 5 1 -2                    goal +1 x1 +1 x2 >= 1 ;
    conclusion 1 0               end
    end

An ER-PLS file starts with a DIMACS formula followed by ``begin er``
blocks (ER rule) and ``begin dominance`` blocks; a dominance-system file
starts with OPB lines and a ``mode`` line followed by one block per step.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .core import ONE, ZERO, PbConstraint, Substitution, check_literal, is_const, sorted_clause, var
from .cp import Add, AxGe, AxLe, CpDerivation, Div, Hyp
from .dominance import (
    Deletion,
    Dominance,
    DomProof,
    General,
    ImplDeriv,
    Linear,
    OrderChange,
    Redundance,
    Transfer,
)
from .er import (
    DropZero,
    ErDerivation,
    ExtendAlias,
    ExtendAnd,
    ExtendConst,
    ExtensionBlock,
    Premise,
    Resolve,
    Weaken,
)
from .erpls import DomRule, ErplsProof, ErRule
from .errors import ParseError
from .symmetry import QRefutation

# --- tokens -------------------------------------------------------------------


def lit_token(lit: int) -> str:
    if lit == ONE:
        return "t"
    if lit == ZERO:
        return "f"
    return str(lit)


def _parse_lit(tok: str, line: int | None = None) -> int:
    if tok == "t":
        return ONE
    if tok == "f":
        return ZERO
    try:
        lit = int(tok)
    except ValueError:
        raise ParseError(f"bad literal {tok!r}", line) from None
    if lit == 0:
        raise ParseError("literal 0 outside a terminator", line)
    try:
        return check_literal(lit)
    except ValueError as e:
        raise ParseError(str(e), line) from None


def _parse_int(tok: str, line: int | None, what: str = "integer") -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected {what}, got {tok!r}", line) from None


def _clause_tokens(toks: Sequence[str], line: int | None) -> frozenset:
    if not toks or toks[-1] != "0":
        raise ParseError("clause must end with 0", line)
    return frozenset(_parse_lit(t, line) for t in toks[:-1])


def clause_text(c: Iterable[int]) -> str:
    return " ".join([lit_token(l) for l in sorted_clause(c)] + ["0"])


# --- CNF ----------------------------------------------------------------------


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s or s == "c" or s.startswith(("c ", "*", "#")):
            continue
        out.append((i, s))
    return out


def _cnf_lines(lines: list[tuple[int, str]]) -> list[frozenset]:
    clauses: list[frozenset] = []
    pending: list[str] = []
    first = None
    for no, s in lines:
        if s.startswith("p "):
            parts = s.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("header must read 'p cnf <vars> <clauses>'", no)
            continue
        for tok in s.split():
            if first is None:
                first = no
            pending.append(tok)
            if tok == "0":
                clauses.append(_clause_tokens(pending, first))
                pending, first = [], None
    if pending:
        raise ParseError("last clause is not terminated by 0", first)
    return clauses


def parse_cnf(text: str) -> tuple[frozenset, ...]:
    """DIMACS CNF; ``t``/``f`` are allowed as constant literals."""
    return tuple(_cnf_lines(_lines(text)))


def print_cnf(clauses: Sequence[Iterable[int]]) -> str:
    clauses = [frozenset(c) for c in clauses]
    vs = {var(l) for c in clauses for l in c if not is_const(l)}
    head = f"p cnf {max(vs, default=0)} {len(clauses)}"
    return "\n".join([head] + [clause_text(c) for c in clauses]) + "\n"


# --- PB -------------------------------------------------------------------------

_TERM = re.compile(r"^([+-]?\d+)$")
_VAR = re.compile(r"^(~?)x(\d+)$")


def parse_pb(text: str, line: int | None = None) -> PbConstraint:
    toks = text.split()
    if not toks or toks[-1] != ";":
        raise ParseError("constraint must end with ';'", line)
    toks = toks[:-1]
    if len(toks) < 3 or toks[-2] not in (">=", "<="):
        raise ParseError("constraint needs a relation >= or <= and a bound", line)
    rel, bound = toks[-2], _parse_int(toks[-1], line, "bound")
    body = toks[:-2]
    terms: list[tuple[int, int]] = []
    if body != ["0"]:
        if len(body) % 2:
            raise ParseError("terms come in coefficient/variable pairs", line)
        for coef, name in zip(body[::2], body[1::2]):
            if not _TERM.match(coef):
                raise ParseError(f"bad coefficient {coef!r}", line)
            m = _VAR.match(name)
            if not m:
                raise ParseError(f"bad variable {name!r}", line)
            v = int(m.group(2))
            if v <= 0:
                raise ParseError("variables are numbered from 1", line)
            terms.append((int(coef), -v if m.group(1) else v))
    return PbConstraint.from_terms(terms, rel, bound)


def print_pb(c: PbConstraint) -> str:
    parts = [f"{coef:+d} x{v}" for v, coef in c.terms]
    return f"{' '.join(parts) if parts else '0'} >= {c.bound} ;"


def parse_opb(text: str) -> tuple[PbConstraint, ...]:
    return tuple(parse_pb(s, no) for no, s in _lines(text))


def print_opb(constraints: Iterable[PbConstraint]) -> str:
    return "".join(print_pb(c) + "\n" for c in constraints)


# --- substitutions ----------------------------------------------------------------


def _subst_line(s: str, line: int | None) -> tuple[int, int]:
    parts = s.split()
    if len(parts) != 3 or parts[1] != "->":
        raise ParseError("substitution lines read 'x<id> -> <image>'", line)
    m = _VAR.match(parts[0])
    if not m or m.group(1):
        raise ParseError(f"bad variable {parts[0]!r}", line)
    img = parts[2]
    if img in ("0", "1"):
        return int(m.group(2)), ONE if img == "1" else ZERO
    m2 = _VAR.match(img)
    if not m2:
        raise ParseError(f"bad image {img!r}", line)
    v = int(m2.group(2))
    return int(m.group(2)), -v if m2.group(1) else v


def _is_subst_line(s: str) -> bool:
    return " -> " in f" {s} "


def parse_subst(text: str) -> Substitution:
    return Substitution(dict(_subst_line(s, no) for no, s in _lines(text)))


def subst_lines(omega: Substitution) -> list[str]:
    out = []
    for v in sorted(omega):
        lit = omega[v]
        img = "1" if lit == ONE else "0" if lit == ZERO else f"{'~' if lit < 0 else ''}x{var(lit)}"
        out.append(f"x{v} -> {img}")
    return out


def print_subst(omega: Substitution) -> str:
    return "".join(l + "\n" for l in subst_lines(omega))


# --- block reader -----------------------------------------------------------------


class _Reader:
    def __init__(self, text: str):
        self.lines = _lines(text)
        self.i = 0

    def peek(self) -> tuple[int, str] | None:
        return self.lines[self.i] if self.i < len(self.lines) else None

    def next(self) -> tuple[int, str]:
        if self.i >= len(self.lines):
            last = self.lines[-1][0] if self.lines else 1
            raise ParseError("unexpected end of input", last)
        self.i += 1
        return self.lines[self.i - 1]

    def begin(self, kind: str) -> int:
        no, s = self.next()
        if s != f"begin {kind}":
            raise ParseError(f"expected 'begin {kind}', got {s!r}", no)
        return no

    def at_end(self) -> bool:
        nxt = self.peek()
        if nxt is None:
            raise ParseError("block is not closed by 'end'", self.lines[-1][0] if self.lines else 1)
        if nxt[1] == "end":
            self.i += 1
            return True
        return False


def _head(s: str) -> tuple[str, str]:
    key, _, rest = s.partition(" ")
    return key, rest.strip()


def _ints(rest: str, no: int, n: int | None = None) -> list[int]:
    toks = rest.split()
    if n is not None and len(toks) != n:
        raise ParseError(f"expected {n} numbers, got {len(toks)}", no)
    return [_parse_int(t, no) for t in toks]


def _var_list(rest: str, no: int) -> list[int]:
    vs = _ints(rest, no)
    if vs and vs[-1] == 0:
        vs = vs[:-1]
    if any(v <= 0 for v in vs):
        raise ParseError("variables are positive integers", no)
    return vs


def _er_step(key: str, rest: str, no: int):
    toks = rest.split()
    if key == "p":
        if len(toks) != 2 or toks[1] != "0":
            raise ParseError("premise step reads 'p <idx> 0'", no)
        return Premise(_parse_int(toks[0], no))
    if key == "r":
        if len(toks) < 4:
            raise ParseError("resolution reads 'r <a> <b> <pivot> <lits...> 0'", no)
        return Resolve(_parse_int(toks[0], no), _parse_int(toks[1], no), _parse_lit(toks[2], no), _clause_tokens(toks[3:], no))
    if key in ("w", "z"):
        if len(toks) < 2:
            raise ParseError(f"'{key} <a> <lits...> 0' expected", no)
        cls = Weaken if key == "w" else DropZero
        return cls(_parse_int(toks[0], no), _clause_tokens(toks[1:], no))
    if key == "e2":
        if len(toks) != 3:
            raise ParseError("'e2 y u v' expected", no)
        return ExtendAnd(_parse_int(toks[0], no), _parse_lit(toks[1], no), _parse_lit(toks[2], no))
    if key == "e1":
        if len(toks) != 2:
            raise ParseError("'e1 y u' expected", no)
        return ExtendAlias(_parse_int(toks[0], no), _parse_lit(toks[1], no))
    if key == "e0":
        if len(toks) != 2 or toks[1] not in ("0", "1"):
            raise ParseError("'e0 y <0|1>' expected", no)
        return ExtendConst(_parse_int(toks[0], no), int(toks[1]))
    raise ParseError(f"unknown ER step {key!r}", no)


def er_step_text(s) -> str:
    if isinstance(s, Premise):
        return f"p {s.index} 0"
    if isinstance(s, Resolve):
        return f"r {s.a} {s.b} {lit_token(s.pivot)} {clause_text(s.result)}"
    if isinstance(s, Weaken):
        return f"w {s.a} {clause_text(s.result)}"
    if isinstance(s, DropZero):
        return f"z {s.a} {clause_text(s.result)}"
    if isinstance(s, ExtendAnd):
        return f"e2 {s.y} {lit_token(s.u)} {lit_token(s.v)}"
    if isinstance(s, ExtendAlias):
        return f"e1 {s.y} {lit_token(s.u)}"
    if isinstance(s, ExtendConst):
        return f"e0 {s.y} {s.bit}"
    raise TypeError(f"not an ER step: {s!r}")


def _read_er(r: _Reader) -> ErDerivation:
    r.begin("er")
    premises, steps, conclusions, protected = [], [], [], []
    while not r.at_end():
        no, s = r.next()
        key, rest = _head(s)
        if key == "premise":
            premises.append(_clause_tokens(rest.split(), no))
        elif key == "conclusion":
            conclusions.append(_clause_tokens(rest.split(), no))
        elif key == "protected":
            protected += _var_list(rest, no)
        else:
            steps.append(_er_step(key, rest, no))
    return ErDerivation(tuple(premises), tuple(steps), tuple(conclusions), frozenset(protected))


def _er_lines(pi: ErDerivation) -> list[str]:
    out = ["begin er"]
    out += [f"premise {clause_text(c)}" for c in pi.premises]
    if pi.protected:
        out.append("protected " + " ".join(map(str, sorted(pi.protected))))
    out += [er_step_text(s) for s in pi.steps]
    out += [f"conclusion {clause_text(c)}" for c in pi.conclusions]
    out.append("end")
    return out


def _cp_step(key: str, rest: str, no: int):
    if key == "h":
        return Hyp(*_ints(rest, no, 1))
    if key == "axge":
        return AxGe(*_ints(rest, no, 1))
    if key == "axle":
        return AxLe(*_ints(rest, no, 1))
    if key == "add":
        return Add(*_ints(rest, no, 4))
    if key == "div":
        return Div(*_ints(rest, no, 2))
    raise ParseError(f"unknown CP step {key!r}", no)


def cp_step_text(s) -> str:
    if isinstance(s, Hyp):
        return f"h {s.index}"
    if isinstance(s, AxGe):
        return f"axge {s.var}"
    if isinstance(s, AxLe):
        return f"axle {s.var}"
    if isinstance(s, Add):
        return f"add {s.a} {s.ma} {s.b} {s.mb}"
    if isinstance(s, Div):
        return f"div {s.a} {s.d}"
    raise TypeError(f"not a CP step: {s!r}")


def _read_cp(r: _Reader) -> CpDerivation:
    r.begin("cp")
    hyps, steps, goals = [], [], []
    while not r.at_end():
        no, s = r.next()
        key, rest = _head(s)
        if key == "hyp":
            hyps.append(parse_pb(rest, no))
        elif key == "goal":
            goals.append(parse_pb(rest, no))
        else:
            steps.append(_cp_step(key, rest, no))
    return CpDerivation(tuple(hyps), tuple(steps), tuple(goals))


def _cp_lines(pi: CpDerivation) -> list[str]:
    out = ["begin cp"]
    out += [f"hyp {print_pb(h)}" for h in pi.hypotheses]
    out += [cp_step_text(s) for s in pi.steps]
    out += [f"goal {print_pb(g)}" for g in pi.goals]
    out.append("end")
    return out


def _whole(r: _Reader, reader):
    out = reader(r)
    nxt = r.peek()
    if nxt is not None:
        raise ParseError(f"unexpected {nxt[1]!r} after the block", nxt[0])
    return out


def parse_er(text: str) -> ErDerivation:
    return _whole(_Reader(text), _read_er)


def print_er(pi: ErDerivation) -> str:
    return "\n".join(_er_lines(pi)) + "\n"


def parse_cp(text: str) -> CpDerivation:
    return _whole(_Reader(text), _read_cp)


def print_cp(pi: CpDerivation) -> str:
    return "\n".join(_cp_lines(pi)) + "\n"


# --- ER-PLS -------------------------------------------------------------------------


def _read_dom_rule(r: _Reader) -> DomRule:
    start = r.begin("dominance")
    clause = order = aux = None
    omega: dict[int, int] = {}
    axioms = []
    derivations = []
    while True:
        nxt = r.peek()
        if nxt is not None and nxt[1] == "begin er":
            derivations.append(_read_er(r))
            continue
        if r.at_end():
            break
        no, s = r.next()
        key, rest = _head(s)
        if key == "clause":
            clause = _clause_tokens(rest.split(), no)
        elif key == "order":
            order = _var_list(rest, no)
        elif key == "aux":
            aux = _var_list(rest, no)
        elif key in ("e2", "e1", "e0"):
            axioms.append(_er_step(key, rest, no))
        elif _is_subst_line(s):
            v, lit = _subst_line(s, no)
            omega[v] = lit
        else:
            raise ParseError(f"unexpected {s!r} in a dominance block", no)
    if clause is None or order is None or aux is None:
        raise ParseError("dominance block needs clause, order and aux lines", start)
    if len(derivations) != 2:
        raise ParseError("dominance block needs exactly two ER derivations", start)
    block = ExtensionBlock(frozenset(order), tuple(axioms))
    return DomRule(clause, tuple(order), block, Substitution(omega), derivations[0], derivations[1], tuple(aux))


def parse_erpls(text: str) -> ErplsProof:
    r = _Reader(text)
    head = []
    while r.peek() is not None and not r.peek()[1].startswith("begin"):
        head.append(r.next())
    initial = _cnf_lines(head)
    steps = []
    while r.peek() is not None:
        no, s = r.peek()
        if s == "begin er":
            steps.append(ErRule(_read_er(r)))
        elif s == "begin dominance":
            steps.append(_read_dom_rule(r))
        else:
            raise ParseError(f"expected an ER or dominance block, got {s!r}", no)
    return ErplsProof(tuple(initial), tuple(steps))


def print_erpls(p: ErplsProof) -> str:
    out = [print_cnf(p.initial).rstrip("\n")]
    for s in p.steps:
        if isinstance(s, ErRule):
            out += _er_lines(s.pi)
            continue
        out.append("begin dominance")
        out.append(f"clause {clause_text(s.clause)}")
        out.append("order " + " ".join(map(str, s.x_order)) + " 0")
        out.append("aux " + " ".join(map(str, s.aux)) + " 0")
        out += subst_lines(s.omega)
        out += [er_step_text(ax) for ax in s.block.axioms]
        out += _er_lines(s.pi_a)
        out += _er_lines(s.pi_b)
        out.append("end")
    return "\n".join(out) + "\n"


# --- dominance proofs ---------------------------------------------------------------


def _read_dom_step(r: _Reader):
    start, s = r.peek()
    kind = s[len("begin "):] if s.startswith("begin ") else None
    r.next()
    constraints: list[PbConstraint] = []
    derived: list[PbConstraint] = []
    core = None
    omega: dict[int, int] = {}
    cps: list[CpDerivation] = []
    linear = general = zvars = None
    order_formula: list[PbConstraint] = []
    while True:
        nxt = r.peek()
        if nxt is not None and nxt[1] == "begin cp":
            cps.append(_read_cp(r))
            continue
        if r.at_end():
            break
        no, line = r.next()
        key, rest = _head(line)
        if key == "constraint":
            constraints.append(parse_pb(rest, no))
        elif key == "derived":
            derived.append(parse_pb(rest, no))
        elif key == "core":
            core = parse_pb(rest, no)
        elif key == "linear":
            linear = _ints(rest, no)
        elif key == "general":
            general = _ints(rest, no, 1)[0]
        elif key == "order":
            order_formula.append(parse_pb(rest, no))
        elif key == "vars":
            zvars = _var_list(rest, no)
        elif _is_subst_line(line):
            v, lit = _subst_line(line, no)
            omega[v] = lit
        else:
            raise ParseError(f"unexpected {line!r} in a {kind} block", no)

    def one() -> PbConstraint:
        if len(constraints) != 1:
            raise ParseError(f"{kind} block needs exactly one constraint line", start)
        return constraints[0]

    def need_cps(n: int) -> None:
        if len(cps) != n:
            raise ParseError(f"{kind} block needs {n} CP derivation(s), found {len(cps)}", start)

    w = Substitution(omega)
    if kind == "implicational":
        need_cps(1)
        return ImplDeriv(one(), cps[0])
    if kind == "redundance":
        need_cps(1)
        return Redundance(one(), w, cps[0])
    if kind == "deletion":
        if core is None:
            need_cps(0)
            return Deletion(tuple(derived))
        need_cps(1)
        return Deletion(tuple(derived), core, w, cps[0])
    if kind == "transfer":
        return Transfer(tuple(constraints))
    if kind == "dominance":
        need_cps(2)
        return Dominance(one(), w, cps[0], cps[1])
    if kind == "order-change":
        zvars = tuple(zvars or ())
        if general is not None:
            need_cps(2)
            try:
                order = General(tuple(order_formula), general, cps[0], cps[1])
            except ValueError as e:
                raise ParseError(str(e), start) from None
        else:
            need_cps(0)
            order = Linear(tuple(linear or ()))
        return OrderChange(order, zvars)
    raise ParseError(f"unknown step kind {kind!r}", start)


def parse_dom(text: str) -> DomProof:
    r = _Reader(text)
    formula = []
    mode = "linear"
    while r.peek() is not None and not r.peek()[1].startswith("begin"):
        no, s = r.next()
        if s.startswith("mode "):
            mode = s.split()[1]
            if mode not in ("full", "linear", "weak"):
                raise ParseError(f"unknown mode {mode!r}", no)
        else:
            formula.append(parse_pb(s, no))
    steps = []
    while r.peek() is not None:
        steps.append(_read_dom_step(r))
    return DomProof(tuple(formula), tuple(steps), mode)


def _dom_step_lines(s) -> list[str]:
    if isinstance(s, ImplDeriv):
        return ["begin implicational", f"constraint {print_pb(s.constraint)}", *_cp_lines(s.proof), "end"]
    if isinstance(s, Redundance):
        return ["begin redundance", f"constraint {print_pb(s.constraint)}", *subst_lines(s.omega), *_cp_lines(s.proof), "end"]
    if isinstance(s, Deletion):
        out = ["begin deletion"] + [f"derived {print_pb(c)}" for c in s.derived]
        if s.core is not None:
            out.append(f"core {print_pb(s.core)}")
            out += subst_lines(s.omega or Substitution())
            if s.proof is not None:
                out += _cp_lines(s.proof)
        return out + ["end"]
    if isinstance(s, Transfer):
        return ["begin transfer"] + [f"constraint {print_pb(c)}" for c in s.constraints] + ["end"]
    if isinstance(s, Dominance):
        return [
            "begin dominance",
            f"constraint {print_pb(s.constraint)}",
            *subst_lines(s.omega),
            *_cp_lines(s.proof),
            *_cp_lines(s.refutation),
            "end",
        ]
    if isinstance(s, OrderChange):
        out = ["begin order-change"]
        if isinstance(s.order, General):
            out.append(f"general {s.order.arity}")
            out += [f"order {print_pb(c)}" for c in s.order.formula]
            if s.order.refl is not None and s.order.trans is not None:
                out += _cp_lines(s.order.refl) + _cp_lines(s.order.trans)
        else:
            out.append("linear " + " ".join(map(str, s.order.coefficients)))
        out.append("vars " + " ".join(map(str, s.zvars)) + " 0")
        return out + ["end"]
    raise TypeError(f"not a dominance step: {s!r}")


def print_dom(p: DomProof) -> str:
    out = [print_pb(c) for c in p.formula] + [f"mode {p.mode}"]
    for s in p.steps:
        out += _dom_step_lines(s)
    return "\n".join(out) + "\n"


# --- Q refutations --------------------------------------------------------------------


def parse_q(text: str) -> QRefutation:
    """DIMACS formula, an ``order`` line, ``begin symmetry`` blocks, one ``begin er`` block."""
    r = _Reader(text)
    head = []
    order = None
    while r.peek() is not None and not r.peek()[1].startswith("begin"):
        no, s = r.next()
        if s.startswith("order"):
            order = _var_list(_head(s)[1], no)
        else:
            head.append((no, s))
    gamma = _cnf_lines(head)
    syms, auxes = [], []
    while r.peek() is not None and r.peek()[1] == "begin symmetry":
        start = r.begin("symmetry")
        omega, aux = {}, None
        while not r.at_end():
            no, s = r.next()
            if s.startswith("aux"):
                aux = _var_list(_head(s)[1], no)
            else:
                v, lit = _subst_line(s, no)
                omega[v] = lit
        if aux is None:
            raise ParseError("symmetry block needs an aux line", start)
        syms.append(Substitution(omega))
        auxes.append(tuple(aux))
    if order is None:
        raise ParseError("missing order line", 1)
    pi = _whole(r, _read_er)
    return QRefutation(tuple(gamma), tuple(order), tuple(syms), tuple(auxes), pi)


def print_q(p: QRefutation) -> str:
    out = [print_cnf(p.gamma).rstrip("\n"), "order " + " ".join(map(str, p.order)) + " 0"]
    for w, aux in zip(p.symmetries, p.aux):
        out += ["begin symmetry", *subst_lines(w), "aux " + " ".join(map(str, aux)) + " 0", "end"]
    out += _er_lines(p.pi)
    return "\n".join(out) + "\n"
