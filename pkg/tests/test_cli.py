import json
import random
import subprocess
import sys

import pytest

from domproof import formats
from domproof.cli import main
from domproof.dominance import DomProof
from domproof.translate import erpls_to_lindom

from .helpers.corpus import DATA, load_corpus
from .helpers.dom_fuzz import weak_mode_cases
from .helpers.refute import refute

F = frozenset


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def _weak_proof(tmp_path):
    formula, prefix, step, nonempty = weak_mode_cases(random.Random(2), 1)[0]
    assert nonempty
    return _write(tmp_path, "weak.dom", formats.print_dom(DomProof(tuple(formula), tuple(prefix) + (step,), "linear")))


def _translated(tmp_path, name="swap3"):
    return _write(tmp_path, f"{name}.dom", formats.print_dom(erpls_to_lindom(load_corpus()[name])))


def test_check_er_accepts(tmp_path, capsys):
    path = _write(tmp_path, "ok.er", formats.print_er(refute([F({1}), F({-1})])))
    code, out, _ = _run(capsys, "check", "er", path)
    assert code == 0 and out.strip() == "accept"


def test_check_er_rejects_with_step(tmp_path, capsys):
    text = "begin er\npremise 1 0\npremise -1 2 0\np 0 0\np 1 0\nr 0 1 1 1 0\nend\n"
    code, out, _ = _run(capsys, "--json", "check", "er", _write(tmp_path, "bad.er", text))
    v = json.loads(out)
    assert code == 1 and v["status"] == "reject" and v["step"] == 2
    assert v["reason"]


def test_parse_error_exit_code(tmp_path, capsys):
    path = _write(tmp_path, "broken.er", "begin er\npremise 1 0\np 0 0\nr 1\nend\n")
    code, out, _ = _run(capsys, "check", "er", path)
    assert code == 2 and out.startswith("parse-error") and "line 4" in out


def test_missing_file_is_exit_2(capsys):
    code, out, _ = _run(capsys, "check", "erpls", "/nonexistent/proof.erpls")
    assert code == 2


def test_check_erpls_corpus_file(capsys):
    code, out, _ = _run(capsys, "--json", "check", "erpls", str(DATA / "swap3.erpls"))
    v = json.loads(out)
    assert code == 0 and v["status"] == "accept"
    assert v["stats"]["steps"] == 2 and v["stats"]["wall_time"] >= 0


def test_translate_then_check_pipeline():
    src = DATA / "php32.erpls"
    cmd = [sys.executable, "-m", "domproof.cli"]
    translated = subprocess.run(cmd + ["translate", "erpls-to-dom", str(src)], capture_output=True, text=True, check=True)
    checked = subprocess.run(cmd + ["check", "dom", "--mode", "linear", "-"], input=translated.stdout, capture_output=True, text=True)
    assert checked.returncode == 0, checked.stdout
    assert checked.stdout.strip() == "accept"


def test_translate_seed_is_reproducible(capsys):
    path = str(DATA / "extension_image.erpls")
    first = _run(capsys, "--seed", "7", "translate", "erpls-to-dom", path)[1]
    second = _run(capsys, "--seed", "7", "translate", "erpls-to-dom", path)[1]
    assert first == second and first.startswith("+")


def test_weak_mode_rejects_nonempty_derived_set(tmp_path, capsys):
    # the translated dominance step fires while π_a's constraints sit in D
    path = _translated(tmp_path)
    assert _run(capsys, "check", "dom", path)[0] == 0
    code, out, _ = _run(capsys, "--json", "check", "dom", "--mode", "weak", path)
    v = json.loads(out)
    assert code == 1 and v["rule"] == "dominance" and "derived" in v["reason"]


def test_check_dom_needs_a_refutation(tmp_path, capsys):
    code, out, _ = _run(capsys, "check", "dom", _weak_proof(tmp_path))
    assert code == 1 and "0 >= 1" in out


def test_gen_lex_pb(capsys):
    code, out, _ = _run(capsys, "gen", "lex", "--bits", "3", "--strict", "--pb")
    c = formats.parse_pb(out.strip())
    assert code == 0 and sorted(abs(a) for _, a in c.terms) == [1, 1, 2, 2, 4, 4]
    assert out.count(";") == 1


def test_gen_lex_cnf(capsys):
    code, out, _ = _run(capsys, "gen", "lex", "--bits", "2")
    assert code == 0 and len(formats.parse_cnf(out)) > 0


def test_gen_lex_leader_and_break_symmetry(tmp_path, capsys):
    cnf = _write(tmp_path, "x.cnf", "p cnf 2 2\n1 2 0\n-1 -2 0\n")
    sub = _write(tmp_path, "swap.sub", "x1 -> x2\nx2 -> x1\n")
    code, leader, _ = _run(capsys, "gen", "lex-leader", cnf, sub)
    assert code == 0
    code, broken, _ = _run(capsys, "break-symmetry", cnf, sub)
    assert code == 0
    assert set(formats.parse_cnf(broken)) == {F({1, 2}), F({-1, -2})} | set(formats.parse_cnf(leader))


def test_break_symmetry_rejects_non_symmetry(tmp_path, capsys):
    cnf = _write(tmp_path, "x.cnf", "p cnf 2 2\n1 2 0\n-1 0\n")
    sub = _write(tmp_path, "swap.sub", "x1 -> x2\nx2 -> x1\n")
    code, _, err = _run(capsys, "break-symmetry", cnf, sub)
    assert code == 2 and "not a symmetry" in err


def test_oracle_queries(tmp_path, capsys):
    sat = _write(tmp_path, "sat.cnf", "p cnf 2 2\n1 2 0\n-1 -2 0\n")
    unsat = _write(tmp_path, "unsat.cnf", "p cnf 1 2\n1 0\n-1 0\n")
    code, out, _ = _run(capsys, "oracle", "lexmin", sat)
    assert code == 0 and out.splitlines()[0] == "v -1 2 0"
    assert _run(capsys, "oracle", "sat", unsat)[0] == 1
    assert _run(capsys, "oracle", "equisat", sat, sat)[0] == 0
    assert _run(capsys, "oracle", "equisat", sat, unsat)[0] == 1


def test_oracle_valid_on_a_walk(tmp_path, capsys):
    path = _weak_proof(tmp_path)
    code, out, _ = _run(capsys, "--json", "oracle", "valid", path)
    assert code == 0 and json.loads(out)["stats"]["configurations"] >= 2


def test_asymmetrize(tmp_path, capsys):
    cnf = _write(tmp_path, "one.cnf", "p cnf 1 1\n1 0\n")
    code, out, _ = _run(capsys, "asymmetrize", cnf)
    assert code == 0 and formats.parse_cnf(out) == (F({1}), F({1, 2}))


def test_check_q_limit(tmp_path, capsys):
    from domproof.symmetry import QRefutation

    gamma = (F({1}), F({-1}))
    p = QRefutation(gamma, (1,), (), (), refute(gamma))
    path = _write(tmp_path, "p.q", formats.print_q(p))
    assert _run(capsys, "check-q", path, "--max-symmetries", "1")[0] == 0


@pytest.mark.parametrize("name", ["swap3", "two_rules_php32"])
def test_exit_codes_are_stable(name, capsys):
    path = str(DATA / f"{name}.erpls")
    codes = {_run(capsys, "check", "erpls", path)[0] for _ in range(3)}
    assert codes == {0}
    assert name in load_corpus()
