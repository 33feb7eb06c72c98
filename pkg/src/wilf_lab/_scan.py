"""Word-level scan kernel for the two-generator bulk verifier.

Kept in its own module so importing the package never pays the numba
compilation cost; the lattice module imports this lazily, and the compiled
kernel is cached on disk after the first call.
"""

from __future__ import annotations

import numpy as np
from numba import njit, uint64

__all__ = ["scan_pair"]


@njit(cache=True)
def scan_pair(gap_words, member_words, gap_values, out_cond, out_min):
    """Per-gap conductor and minimal-intersection scans for one (alpha, beta).

    ``gap_words``/``member_words`` are little-bit-order uint64 masks of the
    gap indicator over [0, c) and the member indicator over [0, alpha*beta).
    For every gap g, out_cond gets the conductor of the semimodule generated
    by {0, g} — one plus the highest set bit of
    gap_mask & ((gap_mask << g) | low_g) — and out_min gets the least element
    of the intersection of the semigroup with its g-translate — the lowest
    set bit of member_mask & (member_mask << g), which is at least g.  A gap
    whose intersection scan runs off the member window reports -1.
    """
    n_gap_words = gap_words.shape[0]
    n_member_words = member_words.shape[0]
    for i in range(gap_values.shape[0]):
        g = gap_values[i]
        q = g >> 6
        r = g & 63
        cond = 0
        w = n_gap_words - 1
        while w >= 0:
            if w > q:
                v = gap_words[w - q] << r
                if r > 0:
                    v |= gap_words[w - q - 1] >> (64 - r)
            elif w == q:
                v = gap_words[0] << r
                if r > 0:
                    v |= (uint64(1) << r) - uint64(1)
            else:
                v = uint64(0xFFFFFFFFFFFFFFFF)
            v &= gap_words[w]
            if v != uint64(0):
                hb = 0
                vv = v
                if vv >> 32:
                    hb += 32
                    vv >>= 32
                if vv >> 16:
                    hb += 16
                    vv >>= 16
                if vv >> 8:
                    hb += 8
                    vv >>= 8
                if vv >> 4:
                    hb += 4
                    vv >>= 4
                if vv >> 2:
                    hb += 2
                    vv >>= 2
                if vv >> 1:
                    hb += 1
                cond = (w << 6) + hb + 1
                break
            w -= 1
        out_cond[i] = cond
        mini = -1
        w = q
        while w < n_member_words:
            if w > q:
                v = member_words[w - q] << r
                if r > 0:
                    v |= member_words[w - q - 1] >> (64 - r)
            else:
                v = member_words[0] << r
            v &= member_words[w]
            if v != uint64(0):
                lb = 0
                vv = v & (~v + uint64(1))
                if vv >> 32:
                    lb += 32
                    vv >>= 32
                if vv >> 16:
                    lb += 16
                    vv >>= 16
                if vv >> 8:
                    lb += 8
                    vv >>= 8
                if vv >> 4:
                    lb += 4
                    vv >>= 4
                if vv >> 2:
                    lb += 2
                    vv >>= 2
                if vv >> 1:
                    lb += 1
                mini = (w << 6) + lb
                break
            w += 1
        out_min[i] = mini


def pack_words(indicator: np.ndarray) -> np.ndarray:
    """Pack a 0/1 (or boolean) array into little-bit-order uint64 words."""
    packed = np.packbits(indicator.astype(np.uint8), bitorder="little")
    if packed.size % 8:
        packed = np.concatenate(
            [packed, np.zeros(8 - packed.size % 8, dtype=np.uint8)]
        )
    return packed.view(np.uint64)
