"""Regenerate ``src/domproof/templates.py``.

Searches for short cutting-planes derivations of each adder bit equation
from that bit's extension clauses, trying seeded random branching orders
followed by a swap hill-climb, then verifies and writes the best found.

    python3 tools/gen_templates.py [--restarts 400] [--seed 0]
"""

import argparse
import pprint
import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from domproof.cp import Add, AxGe, AxLe, Hyp, check_cp  # noqa: E402
from domproof.er import axiom_clauses  # noqa: E402
from domproof.ordering import FIRST_GATES, INTERIOR_GATES, bit_axioms, bit_equation, role_count  # noqa: E402
from tests.helpers.cp_search import prove  # noqa: E402

OUT = ROOT / "src" / "domproof" / "templates.py"


def encode(step):
    if isinstance(step, Hyp):
        return ("h", step.index)
    if isinstance(step, AxGe):
        return ("axge", step.var)
    if isinstance(step, AxLe):
        return ("axle", step.var)
    if isinstance(step, Add):
        return ("add", step.a, step.ma, step.b, step.mb)
    return ("div", step.a, step.d)


def best_order(clauses, goal, n, rng, restarts):
    def cost(order):
        return len(prove(clauses, goal, order).steps)

    best = list(range(1, n + 1))
    best_cost = cost(best)
    for _ in range(restarts):
        order = list(range(1, n + 1))
        rng.shuffle(order)
        c = cost(order)
        if c < best_cost:
            best, best_cost = order, c
    improved = True
    while improved:
        improved = False
        for i in range(n):
            for j in range(i + 1, n):
                cand = best[:]
                cand[i], cand[j] = cand[j], cand[i]
                c = cost(cand)
                if c < best_cost:
                    best, best_cost, improved = cand, c, True
    return best, best_cost


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--restarts", type=int, default=400)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    data = {}
    for name, first, gates in (("first", True, FIRST_GATES), ("interior", False, INTERIOR_GATES)):
        n = role_count(first)
        roles = {i: i for i in range(1, n + 1)}
        clauses = [c for ax in bit_axioms(gates, roles) for c in axiom_clauses(ax)]
        ge, le = bit_equation(roles, first)
        entry = {}
        for direction, goal in (("ge", ge), ("le", le)):
            order, size = best_order(clauses, goal, n, rng, args.restarts)
            d = prove(clauses, goal, order)
            derived = check_cp(d)
            assert derived[-1] == goal
            entry[direction] = tuple(encode(s) for s in d.steps)
            print(f"{name}/{direction}: {size} steps, order {order}")
        data[name] = entry
    body = pprint.pformat(data, width=100, compact=True)
    OUT.write_text(
        '"""Frozen cutting-planes derivations of the adder bit equations.\n\n'
        "Generated by tools/gen_templates.py; do not edit.  Variables are the\n"
        "roles of ``ordering.FIRST_ROLES`` / ``ordering.INTERIOR_ROLES`` and\n"
        "hypothesis ``i`` is the ``i``-th clause of the bit's extension axioms.\n"
        '"""\n\n'
        "from .cp import Add, AxGe, AxLe, Div, Hyp\n\n"
        "_KINDS = {\"h\": Hyp, \"axge\": AxGe, \"axle\": AxLe, \"add\": Add, \"div\": Div}\n\n"
        f"RAW = {body}\n\n\n"
        "def _decode(rows):\n"
        "    return tuple(_KINDS[row[0]](*row[1:]) for row in rows)\n\n\n"
        "TEMPLATES = {shape: {d: _decode(rows) for d, rows in entry.items()} for shape, entry in RAW.items()}\n"
    )
    print(f"wrote {OUT.relative_to(ROOT)}")


if __name__ == "__main__":
    main()
