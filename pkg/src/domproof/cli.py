"""Command line for checking, translating and generating proofs.

Exit status is 0 when a check accepts (or an oracle query holds), 1 when
it rejects, and 2 on parse or I/O errors.  ``-`` reads a file from stdin.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from . import formats, oracle
from .core import PbConstraint
from .cp import check_cp
from .dominance import Configuration, DomProof, apply_step, check_dom, witnesses
from .er import check_er
from .erpls import check_erpls
from .errors import ParseError, ProofRejected
from .ordering import gen_L_strict, gen_lex
from .symmetry import asymmetrize, break_symmetries, check_q, gen_lex_leader, symmetries
from .translate import erpls_to_lindom

EXIT_ACCEPT, EXIT_REJECT, EXIT_ERROR = 0, 1, 2


@dataclass
class Verdict:
    status: str  # accept | reject | parse-error
    step: int | None = None
    rule: str | None = None
    reason: str = ""
    stats: dict = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return {"accept": EXIT_ACCEPT, "reject": EXIT_REJECT}.get(self.status, EXIT_ERROR)

    def line(self) -> str:
        if self.status == "accept":
            return "accept"
        where = ""
        if self.step is not None and self.step >= 0:
            where = f" at step {self.step}" + (f" ({self.rule})" if self.rule else "")
        return f"{self.status}{where}: {self.reason}"


def _coef_bits(constraints: Iterable[PbConstraint]) -> int:
    return max((abs(c).bit_length() for k in constraints for c in [k.bound, *(t for _, t in k.terms)]), default=0)


def _dom_constraints(p: DomProof) -> Iterable[PbConstraint]:
    yield from p.formula
    for s in p.steps:
        for w in witnesses(s):
            yield from w.hypotheses
            yield from w.goals
        c = getattr(s, "constraint", None)
        if c is not None:
            yield c


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_formula(text: str):
    """CNF or OPB, told apart by the ``;`` terminating OPB lines."""
    if any(line.rstrip().endswith(";") for line in text.splitlines()):
        return formats.parse_opb(text)
    return formats.parse_cnf(text)


def _order(arg: str | None, formula) -> list[int]:
    if arg:
        return [int(t) for t in arg.replace(",", " ").split()]
    return sorted(oracle.formula_vars(formula))


# --- subcommands --------------------------------------------------------------------


def _check(args) -> Verdict:
    text = _read(args.file)
    stats: dict = {}
    if args.system == "er":
        pi = formats.parse_er(text)
        stats["steps"] = len(pi.steps)
        check_er(pi)
    elif args.system == "cp":
        pi = formats.parse_cp(text)
        stats["steps"] = len(pi.steps)
        stats["max_coef_bits"] = _coef_bits(check_cp(pi))
    elif args.system == "erpls":
        p = formats.parse_erpls(text)
        stats["steps"] = len(p.steps)
        stats["size"] = p.size()
        check_erpls(p)
    else:
        p = formats.parse_dom(text)
        if args.mode:
            p = DomProof(p.formula, p.steps, args.mode)
        stats["steps"] = len(p.steps)
        stats["witness_steps"] = sum(len(w.steps) for s in p.steps for w in witnesses(s))
        stats["max_coef_bits"] = _coef_bits(_dom_constraints(p))
        check_dom(p)
    return Verdict("accept", stats=stats)


def _check_q(args) -> Verdict:
    p = formats.parse_q(_read(args.file))
    check_q(p, args.max_symmetries)
    return Verdict("accept", stats={"steps": len(p.pi.steps), "symmetries": len(p.symmetries)})


def _translate(args) -> Verdict:
    p = formats.parse_erpls(_read(args.file))
    d = erpls_to_lindom(p, seed=args.seed)
    sys.stdout.write(formats.print_dom(d))
    return Verdict("accept", stats={"steps": len(d.steps), "size": d.size()})


def _gen_lex(args) -> Verdict:
    r = args.bits
    if args.pb:
        xs, ys = list(range(1, r + 1)), list(range(r + 1, 2 * r + 1))
        if not args.lsb_first:
            xs.reverse()
            ys.reverse()
        c = gen_L_strict(r, xs, ys)
        if not args.strict:
            c = PbConstraint(c.terms, 0)
        sys.stdout.write(formats.print_opb([c]))
    else:
        sys.stdout.write(formats.print_cnf(gen_lex(r, strict=args.strict, msb_first=not args.lsb_first).cnf))
    return Verdict("accept")


def _gen_lex_leader(args) -> Verdict:
    gamma = formats.parse_cnf(_read(args.cnf))
    omega = formats.parse_subst(_read(args.subst))
    sys.stdout.write(formats.print_cnf(gen_lex_leader(gamma, omega, _order(args.order, gamma))))
    return Verdict("accept")


def _break_symmetry(args) -> Verdict:
    gamma = formats.parse_cnf(_read(args.cnf))
    syms = [formats.parse_subst(_read(f)) for f in args.subst]
    if args.all:
        syms += [w for w in symmetries(gamma) if w not in syms]
    out, _ = break_symmetries(gamma, syms, _order(args.order, gamma))
    sys.stdout.write(formats.print_cnf(out))
    return Verdict("accept", stats={"symmetries": len(syms)})


def _asymmetrize(args) -> Verdict:
    sys.stdout.write(formats.print_cnf(asymmetrize(formats.parse_cnf(_read(args.cnf)))))
    return Verdict("accept")


def _holds(ok: bool, reason: str) -> Verdict:
    return Verdict("accept" if ok else "reject", reason="" if ok else reason)


def _model_line(alpha, order: Sequence[int]) -> str:
    return "v " + " ".join(str(v if alpha.value(v) else -v) for v in order) + " 0\n"


def _oracle(args) -> Verdict:
    if args.query == "valid":
        return _oracle_valid(args)
    first = _load_formula(_read(args.files[0]))
    if args.query == "equisat":
        if len(args.files) != 2:
            raise ValueError("equisat needs two formulas")
        second = _load_formula(_read(args.files[1]))
        return _holds(oracle.equisatisfiable(first, second, args.cap), "formulas are not equisatisfiable")
    order = _order(args.order, first)
    finder = oracle.lex_min_model if args.query == "lexmin" else oracle.brute_sat
    alpha = finder(first, order, args.cap)
    if alpha is not None and not args.json:
        sys.stdout.write(_model_line(alpha, order))
    return _holds(alpha is not None, "formula is unsatisfiable")


def _oracle_valid(args) -> Verdict:
    p = formats.parse_dom(_read(args.files[0]))
    cfg = Configuration.initial(p.formula)
    for k, s in enumerate([None, *p.steps]):
        if s is not None:
            cfg = apply_step(cfg, s, p.mode)
        if not oracle.config_valid(cfg, args.cap):
            where = "the initial configuration" if s is None else f"the configuration after step {k - 1}"
            return Verdict("reject", None if s is None else k - 1, None, f"{where} is not valid")
    return Verdict("accept", stats={"configurations": len(p.steps) + 1})


# --- argument parsing -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    def options(default):
        # subcommands repeat the options with suppressed defaults, so a value
        # given before the subcommand is not reset by the subparser
        p = argparse.ArgumentParser(add_help=False)
        p.add_argument("--json", action="store_true", default=default(False), help="print the verdict as one JSON object")
        p.add_argument("--seed", type=int, default=default(0), help="offset for fresh-variable numbering")
        return p

    common = options(lambda _: argparse.SUPPRESS)
    ap = argparse.ArgumentParser(prog="domproof", description=__doc__.splitlines()[0], parents=[options(lambda d: d)])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="check a proof file")
    c.add_argument("system", choices=["er", "cp", "erpls", "dom"])
    c.add_argument("file")
    c.add_argument("--mode", choices=["full", "linear", "weak"], help="override the proof's mode line")
    c.set_defaults(run=_check)

    q = sub.add_parser("check-q", parents=[common], help="check a refutation with lex-leaders")
    q.add_argument("file")
    q.add_argument("--max-symmetries", type=int, default=None)
    q.set_defaults(run=_check_q)

    t = sub.add_parser("translate", parents=[common], help="compile an ER-PLS refutation")
    t.add_argument("direction", choices=["erpls-to-dom"])
    t.add_argument("file")
    t.set_defaults(run=_translate)

    g = sub.add_parser("gen", parents=[common], help="generate gadgets")
    gsub = g.add_subparsers(dest="what", required=True)
    gl = gsub.add_parser("lex", parents=[common])
    gl.add_argument("--bits", type=int, required=True)
    gl.add_argument("--strict", action="store_true")
    gl.add_argument("--pb", action="store_true", help="print the single PB constraint instead")
    gl.add_argument("--lsb-first", action="store_true")
    gl.set_defaults(run=_gen_lex)
    gll = gsub.add_parser("lex-leader", parents=[common])
    gll.add_argument("cnf")
    gll.add_argument("subst")
    gll.add_argument("--order")
    gll.set_defaults(run=_gen_lex_leader)

    b = sub.add_parser("break-symmetry", parents=[common], help="add lex-leaders to a CNF")
    b.add_argument("cnf")
    b.add_argument("subst", nargs="*")
    b.add_argument("--all", action="store_true", help="also add every literal-permutation symmetry")
    b.add_argument("--order")
    b.set_defaults(run=_break_symmetry)

    o = sub.add_parser("oracle", parents=[common], help="brute-force semantic queries")
    o.add_argument("query", choices=["sat", "equisat", "lexmin", "valid"])
    o.add_argument("files", nargs="+")
    o.add_argument("--order")
    o.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    o.set_defaults(run=_oracle)

    a = sub.add_parser("asymmetrize", parents=[common], help="pad a CNF so it has no symmetries")
    a.add_argument("cnf")
    a.set_defaults(run=_asymmetrize)
    return ap


_VERDICT_COMMANDS = {"check", "check-q", "oracle"}


def run(argv: Sequence[str] | None = None) -> Verdict:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        v = args.run(args)
    except ProofRejected as e:
        v = Verdict("reject", e.step, e.rule, e.reason)
    except ParseError as e:
        v = Verdict("parse-error", reason=str(e))
    except (OSError, ValueError) as e:
        v = Verdict("parse-error", reason=str(e))
    if v.status == "reject" and v.step is None:
        v.step = -1  # whole-proof condition, not tied to one step
    v.stats["wall_time"] = round(time.perf_counter() - start, 6)
    out = sys.stdout if args.command in _VERDICT_COMMANDS else sys.stderr
    if args.json:
        print(json.dumps(asdict(v), sort_keys=True), file=out)
    elif args.command in _VERDICT_COMMANDS or v.status != "accept":
        print(v.line(), file=out)
    return v


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv).exit_code


if __name__ == "__main__":
    sys.exit(main())
