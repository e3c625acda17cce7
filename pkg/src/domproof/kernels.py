"""Kernel selection: the compiled extension when importable, else numpy."""

import os

BACKEND = "python"

if not os.environ.get("DOMPROOF_PURE_PYTHON"):
    try:
        from ._kernels import cnf_table, first_cnf_model, pb_table  # noqa: F401

        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._pykernels import cnf_table, first_cnf_model, pb_table  # noqa: F401

from . import _pykernels as python_kernels  # noqa: E402,F401
