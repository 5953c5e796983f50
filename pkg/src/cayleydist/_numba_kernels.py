"""numba implementations of the enumeration kernels.

Import only when the numba backend is active; the signatures mirror the
numpy backend in kernels.py exactly. cache=True keeps compiled code in
__pycache__ so repeated runs skip JIT.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def enumerate_generating(blocks: np.ndarray, complements: np.ndarray) -> np.ndarray:
    n_blocks = blocks.shape[0]
    total = (np.int64(1) << n_blocks) - 1
    out = np.empty(total, dtype=np.uint32)
    count = 0
    for c in range(1, total + 1):
        em = np.uint64(0)
        cc = c
        b = 0
        while cc:
            if cc & 1:
                em |= blocks[b]
            cc >>= 1
            b += 1
        ok = True
        for i in range(complements.shape[0]):
            if em & complements[i] == np.uint64(0):
                ok = False
                break
        if ok:
            out[count] = np.uint32(c)
            count += 1
    return out[:count].copy()


@njit(cache=True)
def orbit_labels(
    choices: np.ndarray,
    index_of: np.ndarray,
    lo_tabs: np.ndarray,
    hi_tabs: np.ndarray,
    lo_bits: int,
) -> np.ndarray:
    n = choices.shape[0]
    n_autos = lo_tabs.shape[0]
    lo_mask = np.uint32((1 << lo_bits) - 1)
    labels = np.full(n, -1, dtype=np.int64)
    stack = np.empty(n, dtype=np.int64)
    for root in range(n):
        if labels[root] >= 0:
            continue
        labels[root] = root
        stack[0] = root
        top = 1
        while top:
            top -= 1
            idx = stack[top]
            m = choices[idx]
            lo = m & lo_mask
            hi = m >> np.uint32(lo_bits)
            for a in range(n_autos):
                img = lo_tabs[a, lo] | hi_tabs[a, hi]
                j = index_of[img]
                if labels[j] < 0:
                    labels[j] = root
                    stack[top] = j
                    top += 1
    return labels
