"""Pure-Python/numpy versions of the enumeration kernels.

Same contracts as the compiled ``_kernels`` module; used when the extension
is not built or ``DOMPROOF_PURE_PYTHON`` is set.
"""

import numpy as np

_CHUNK = 1 << 16


def _bit_columns(start: int, stop: int, n: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.uint64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint64)
    return ((idx[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.int64)


def cnf_table(pos, neg, n: int) -> np.ndarray:
    total = 1 << n
    full = np.uint64(total - 1)
    out = np.ones(total, dtype=np.uint8)
    pos = np.asarray(pos, dtype=np.uint64)
    neg = np.asarray(neg, dtype=np.uint64)
    for start in range(0, total, _CHUNK):
        a = np.arange(start, min(total, start + _CHUNK), dtype=np.uint64)
        ok = np.ones(a.shape, dtype=bool)
        for p, q in zip(pos, neg):
            ok &= ((a & p) | (~a & full & q)) != 0
        out[start:start + len(a)] = ok
    return out


def first_cnf_model(pos, neg, n: int) -> int:
    total = 1 << n
    full = np.uint64(total - 1)
    pos = np.asarray(pos, dtype=np.uint64)
    neg = np.asarray(neg, dtype=np.uint64)
    for start in range(0, total, _CHUNK):
        a = np.arange(start, min(total, start + _CHUNK), dtype=np.uint64)
        ok = np.ones(a.shape, dtype=bool)
        for p, q in zip(pos, neg):
            ok &= ((a & p) | (~a & full & q)) != 0
        hits = np.flatnonzero(ok)
        if hits.size:
            return int(start + hits[0])
    return -1


def pb_table(coefs, bounds, n: int) -> np.ndarray:
    coefs = np.asarray(coefs, dtype=np.int64).reshape(-1, n)
    bounds = np.asarray(bounds, dtype=np.int64)
    total = 1 << n
    out = np.ones(total, dtype=np.uint8)
    if coefs.shape[0] == 0:
        return out
    for start in range(0, total, _CHUNK):
        stop = min(total, start + _CHUNK)
        bits = _bit_columns(start, stop, n)
        lhs = bits @ coefs.T
        out[start:stop] = np.all(lhs >= bounds[None, :], axis=1)
    return out
