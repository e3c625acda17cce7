"""Write the ER-PLS test corpus to ``tests/data/corpus``.

Each proof is rebuilt from ``tests/helpers/corpus.py``, checked, and
written as ``<name>.erpls`` next to its input ``<name>.cnf``.

    python3 tools/gen_corpus.py
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from domproof.erpls import check_erpls  # noqa: E402
from domproof.formats import print_cnf, print_erpls  # noqa: E402
from tests.helpers.corpus import build_corpus  # noqa: E402

OUT = ROOT / "tests" / "data" / "corpus"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, proof in build_corpus().items():
        check_erpls(proof)
        (OUT / f"{name}.cnf").write_text(print_cnf(proof.initial))
        (OUT / f"{name}.erpls").write_text(print_erpls(proof))
        print(f"{name}: {len(proof)} steps, size {proof.size()}")


if __name__ == "__main__":
    main()
