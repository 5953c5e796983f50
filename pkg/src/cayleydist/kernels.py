"""Hot enumeration kernels with selectable backends.

The census oracle enumerates up to 2^24 candidate connection sets as
unions of symmetric blocks and partitions them into automorphism orbits.
Those loops are the only hot spots in the package, so they exist twice:

* a numba @njit backend (default when numba imports), and
* a pure numpy backend with identical semantics.

Select with the CAYLEYDIST_KERNELS environment variable ("numba",
"python", or "auto"). Everything here works on uint64 element bitmasks,
which is fine because a census with B symmetric blocks concerns a group
of order at most 2B+1 <= 49. ``python -m cayleydist.bench`` compares the
two backends.
"""

from __future__ import annotations

import os

import numpy as np

_ENV_VAR = "CAYLEYDIST_KERNELS"
_resolved: str | None = None


def _numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def active_backend() -> str:
    """Resolve the kernel backend once per process: 'numba' or 'python'."""
    global _resolved
    if _resolved is None:
        choice = os.environ.get(_ENV_VAR, "auto").strip().lower()
        if choice not in ("auto", "numba", "python"):
            raise ValueError(f"{_ENV_VAR} must be auto, numba or python, got {choice!r}")
        if choice == "python":
            _resolved = "python"
        elif choice == "numba":
            if not _numba_available():
                raise RuntimeError("numba backend requested but numba is not importable")
            _resolved = "numba"
        else:
            _resolved = "numba" if _numba_available() else "python"
    return _resolved


# ---------------------------------------------------------------------------
# public entry points


def enumerate_generating_choices(
    block_masks: list[int],
    maximal_masks: list[int],
    n_elements: int,
    backend: str | None = None,
) -> np.ndarray:
    """All nonempty block-choice masks whose element union generates.

    A choice generates iff its element mask escapes every maximal proper
    subgroup mask. Returns uint32 choice masks, ascending.
    """
    n_blocks = len(block_masks)
    if n_blocks == 0:
        return np.zeros(0, dtype=np.uint32)
    if n_blocks > 24:
        raise ValueError(f"choice enumeration limited to 24 blocks, got {n_blocks}")
    if n_elements > 64:
        raise ValueError("kernel path requires group order <= 64")
    blocks = np.array(block_masks, dtype=np.uint64)
    full = np.uint64((1 << n_elements) - 1)
    complements = np.array(
        [((1 << n_elements) - 1) ^ m for m in maximal_masks], dtype=np.uint64
    )
    if backend is None:
        backend = active_backend()
    if backend == "numba":
        from . import _numba_kernels

        return _numba_kernels.enumerate_generating(blocks, complements)
    return _enumerate_generating_py(blocks, complements, full)


def orbit_labels(
    choices: np.ndarray,
    n_blocks: int,
    block_perms: np.ndarray,
    backend: str | None = None,
) -> np.ndarray:
    """Orbit label per choice: the least choice-index in its orbit.

    block_perms has one row per automorphism, mapping block index to block
    index. Inverse permutations are added internally, so the labels are the
    orbits of the group *generated by* the supplied maps.
    """
    n = choices.shape[0]
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    perms = [np.asarray(p, dtype=np.int64) for p in block_perms]
    perms += [np.argsort(p) for p in perms]
    lo_bits = (n_blocks + 1) // 2
    lo_tabs, hi_tabs = _build_mask_tables(perms, n_blocks, lo_bits)
    index_of = np.full(1 << n_blocks, -1, dtype=np.int32)
    index_of[choices.astype(np.int64)] = np.arange(n, dtype=np.int32)
    if backend is None:
        backend = active_backend()
    if backend == "numba":
        from . import _numba_kernels

        return _numba_kernels.orbit_labels(choices, index_of, lo_tabs, hi_tabs, lo_bits)
    return _orbit_labels_py(choices, index_of, lo_tabs, hi_tabs, lo_bits)


def choice_element_masks(choices: np.ndarray, block_masks: list[int]) -> np.ndarray:
    """uint64 element mask per choice mask (vectorized, backend-free)."""
    out = np.zeros(choices.shape[0], dtype=np.uint64)
    for b, mask in enumerate(block_masks):
        sel = (choices >> np.uint32(b)) & np.uint32(1) == 1
        out[sel] |= np.uint64(mask)
    return out


def choice_weights(choices: np.ndarray, weights: list[int]) -> np.ndarray:
    """Sum of per-block weights over the set bits of each choice."""
    out = np.zeros(choices.shape[0], dtype=np.int64)
    for b, w in enumerate(weights):
        sel = (choices >> np.uint32(b)) & np.uint32(1) == 1
        out[sel] += w
    return out


def _build_mask_tables(
    perms: list[np.ndarray], n_blocks: int, lo_bits: int
) -> tuple[np.ndarray, np.ndarray]:
    # tab[a][m] = image mask of the low (resp. high) bits m under permutation a
    hi_bits = n_blocks - lo_bits
    lo_tabs = np.zeros((len(perms), 1 << lo_bits), dtype=np.uint32)
    hi_tabs = np.zeros((len(perms), 1 << hi_bits), dtype=np.uint32)
    lo_idx = np.arange(1 << lo_bits, dtype=np.uint32)
    hi_idx = np.arange(1 << hi_bits, dtype=np.uint32)
    for a, perm in enumerate(perms):
        for b in range(lo_bits):
            lo_tabs[a][(lo_idx >> np.uint32(b)) & np.uint32(1) == 1] |= np.uint32(
                1 << int(perm[b])
            )
        for b in range(hi_bits):
            hi_tabs[a][(hi_idx >> np.uint32(b)) & np.uint32(1) == 1] |= np.uint32(
                1 << int(perm[lo_bits + b])
            )
    return lo_tabs, hi_tabs


# ---------------------------------------------------------------------------
# numpy backend

_CHUNK = 1 << 20


def _enumerate_generating_py(
    blocks: np.ndarray, complements: np.ndarray, full: np.uint64
) -> np.ndarray:
    n_blocks = blocks.shape[0]
    total = (1 << n_blocks) - 1
    parts = []
    for start in range(1, total + 1, _CHUNK):
        stop = min(start + _CHUNK, total + 1)
        c = np.arange(start, stop, dtype=np.uint32)
        em = np.zeros(c.shape[0], dtype=np.uint64)
        for b in range(n_blocks):
            sel = (c >> np.uint32(b)) & np.uint32(1) == 1
            em[sel] |= blocks[b]
        ok = np.ones(c.shape[0], dtype=bool)
        for comp in complements:
            ok &= (em & comp) != 0
        parts.append(c[ok])
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.uint32)


def _orbit_labels_py(
    choices: np.ndarray,
    index_of: np.ndarray,
    lo_tabs: np.ndarray,
    hi_tabs: np.ndarray,
    lo_bits: int,
) -> np.ndarray:
    # min-label propagation; converges because labels only decrease
    n = choices.shape[0]
    n_autos = len(lo_tabs)
    lo_mask = np.uint32((1 << lo_bits) - 1)
    lo = (choices & lo_mask).astype(np.int64)
    hi = (choices >> np.uint32(lo_bits)).astype(np.int64)
    cache_neighbors = n_autos * n <= (1 << 26)

    def neighbors(a: int) -> np.ndarray:
        img = lo_tabs[a][lo] | hi_tabs[a][hi]
        return index_of[img.astype(np.int64)]

    cached = [neighbors(a) for a in range(n_autos)] if cache_neighbors else None
    labels = np.arange(n, dtype=np.int64)
    while True:
        prev = labels.copy()
        labels = labels[labels]  # pointer jumping
        for a in range(n_autos):
            nb = cached[a] if cached is not None else neighbors(a)
            np.minimum(labels, labels[nb], out=labels)
        if np.array_equal(labels, prev):
            break
    return labels
