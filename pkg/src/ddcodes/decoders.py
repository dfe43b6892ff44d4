"""Component soft-decision decoders: sum-product, ordered statistics, exact ML.

These are the inner engines the derivative decoders call on each derivative
LLR vector.  All of them consume log-likelihood ratios with the convention
L > 0 favoring bit 0 and magnitudes clipped to +-30.  The batch variants
decode a stack of LLR vectors at once (one per derivative direction) and
share the `(bits, iterations, converged)` return contract used throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .cyclic import DimensionTooLargeError
from .parity import SparseParityMatrix

__all__ = [
    "LLR_CLIP", "RankDeficientError", "OsdWorkspace",
    "spa_decode", "spa_decode_batch",
    "osd_workspace", "osd_decode", "mld_exhaustive", "all_codewords",
    "spa_batch_decoder", "osd_batch_decoder", "mld_batch_decoder",
]

LLR_CLIP = 30.0
_ATANH_LIM = 1.0 - 1e-12


class RankDeficientError(ValueError):
    """Generator matrix rank is below its row count."""


def spa_decode_batch(H: SparseParityMatrix, L: np.ndarray, max_iter: int = 20):
    """Flooding sum-product decoding of a (batch, n) stack of LLR vectors.

    Check updates use the exact tanh rule; the per-check leave-one-out
    products come from prefix/suffix cumulative products so zero messages
    need no special casing.  A frame stops contributing once its hard
    decision satisfies every check; its iteration count is the first
    iteration where that held.  Non-converged frames report max_iter and the
    final-posterior hard decision.

    Returns (bits, iterations, converged) with shapes (batch, n), (batch,),
    (batch,).
    """
    rows = H.rows
    n = H.n
    L = np.atleast_2d(np.asarray(L, dtype=np.float64))
    B = L.shape[0]
    R = len(rows)
    deg = max(len(r) for r in rows)
    idx = np.zeros((R, deg), dtype=np.int64)
    mask = np.zeros((R, deg), dtype=bool)
    for i, rw in enumerate(rows):
        idx[i, :len(rw)] = rw
        mask[i, :len(rw)] = True
    Lc = np.clip(L, -LLR_CLIP, LLR_CLIP)
    q = Lc[:, idx]                                       # (B, R, deg)
    out = (Lc < 0).astype(np.uint8)
    iters = np.full(B, max_iter, dtype=np.int64)
    conv = np.zeros(B, dtype=bool)
    done = np.zeros(B, dtype=bool)
    flat = idx[None, :, :] + (np.arange(B) * n)[:, None, None]
    tot = np.zeros((B, n))
    for it in range(1, max_iter + 1):
        t = np.tanh(q / 2)
        t = np.where(mask, t, 1.0)
        c = np.cumprod(t, axis=-1)
        left = np.ones_like(t)
        left[..., 1:] = c[..., :-1]
        rs = np.cumprod(t[..., ::-1], axis=-1)[..., ::-1]
        right = np.ones_like(t)
        right[..., :-1] = rs[..., 1:]
        r = 2 * np.arctanh(np.clip(left * right, -_ATANH_LIM, _ATANH_LIM))
        r = np.where(mask, r, 0.0)
        tot = np.bincount(flat.ravel(), weights=r.ravel(),
                          minlength=B * n).reshape(B, n)
        post = Lc + tot
        q = np.clip(post[:, idx] - r, -LLR_CLIP, LLR_CLIP)
        hard = (post < 0).astype(np.uint8)
        synd = np.where(mask, hard[:, idx], 0).sum(axis=-1) % 2
        ok = ~synd.any(axis=-1)
        newly = ok & ~done
        out[newly] = hard[newly]
        iters[newly] = it
        conv |= newly
        done |= newly
        if done.all():
            break
    if not done.all():
        post = Lc + tot
        out[~done] = (post[~done] < 0).astype(np.uint8)
    return out, iters, conv


def spa_decode(H: SparseParityMatrix, L, max_iter: int = 20):
    """Single-vector sum-product decode; returns (bits, converged, iterations)."""
    bits, iters, conv = spa_decode_batch(H, np.asarray(L, dtype=np.float64)[None, :],
                                         max_iter)
    return bits[0], bool(conv[0]), int(iters[0])


@dataclass(frozen=True, eq=False)
class OsdWorkspace:
    """Most-reliable-basis systematization for one received LLR vector."""
    generator: np.ndarray      # original G
    order_perm: np.ndarray     # positions sorted by falling reliability
    systematic: np.ndarray     # G row-reduced so basis columns are unit vectors
    basis_positions: np.ndarray


def osd_workspace(G: np.ndarray, L: np.ndarray) -> OsdWorkspace:
    """Greedy Gauss-Jordan elimination over the reliability-sorted columns.

    Walks positions from most to least reliable, keeping each column that is
    independent of those already kept, and reduces G so the kept columns form
    an identity (scattered).  Ties in |L| resolve to the lower index.
    """
    G = np.asarray(G, dtype=np.uint8)
    k = G.shape[0]
    M = G.copy()
    cols = np.argsort(-np.abs(L), kind="stable")
    piv = []
    r = 0
    for c in cols:
        nz = np.nonzero(M[r:, c])[0]
        if len(nz) == 0:
            continue
        p = r + nz[0]
        if p != r:
            M[[r, p]] = M[[p, r]]
        for i in np.nonzero(M[:, c])[0]:
            if i != r:
                M[i] ^= M[r]
        piv.append(int(c))
        r += 1
        if r == k:
            break
    if r < k:
        raise RankDeficientError(f"generator rank {r} below row count {k}")
    return OsdWorkspace(G, cols, M, np.array(piv, dtype=np.int64))


def osd_decode(G: np.ndarray, L, order: int) -> np.ndarray:
    """Ordered statistics decoding of reprocessing depth `order`.

    Re-encodes the hard decision on the most reliable basis and every
    pattern of at most `order` basis-bit flips, then returns the candidate
    with the highest correlation sum (1 - 2c) . L; correlation ties resolve
    to the earliest-generated candidate.
    """
    L = np.asarray(L, dtype=np.float64)
    ws = osd_workspace(G, L)
    M = ws.systematic
    k, n = M.shape
    hard = (L < 0).astype(np.uint8)
    sel = np.nonzero(hard[ws.basis_positions])[0]
    c0 = M[sel].sum(axis=0) % 2 if len(sel) else np.zeros(n, dtype=np.uint8)
    pats = [np.zeros((1, n), dtype=np.uint8)]
    for w in range(1, order + 1):
        if w > k:
            break
        if w == 1:
            pats.append(M)
        else:
            I = np.array(list(combinations(range(k), w)))
            acc = M[I[:, 0]]
            for col in range(1, w):
                acc = acc ^ M[I[:, col]]
            pats.append(acc)
    cands = np.concatenate(pats) ^ c0[None, :]
    scores = (1.0 - 2.0 * cands) @ L
    return cands[np.argmax(scores)].astype(np.uint8)


def all_codewords(G: np.ndarray) -> np.ndarray:
    """The full 2^k codebook; row index read as a bit mask selects G rows."""
    G = np.asarray(G, dtype=np.uint8)
    k, n = G.shape
    if k > 20:
        raise DimensionTooLargeError(f"k={k} too large to enumerate")
    out = np.zeros((1 << k, n), dtype=np.uint8)
    for i in range(k):
        step = 1 << i
        out[step:2 * step] = out[:step] ^ G[i]
    return out


def mld_exhaustive(G: np.ndarray, L) -> np.ndarray:
    """Correlation-maximizing codeword over the entire codebook (k <= 20).

    Ties resolve to the lexicographically smallest message, which is the
    lowest codebook index under the bit-mask message convention.
    """
    C = all_codewords(G)
    L = np.asarray(L, dtype=np.float64)
    scores = (1.0 - 2.0 * C.astype(np.float64)) @ L
    return C[np.argmax(scores)]


def spa_batch_decoder(H: SparseParityMatrix, max_iter: int = 20):
    """Batch-decoder closure over a fixed parity-check matrix."""
    def decode(Ld: np.ndarray):
        return spa_decode_batch(H, Ld, max_iter)
    return decode


def osd_batch_decoder(G: np.ndarray, order: int):
    """Batch-decoder closure over a fixed generator matrix (loop per vector)."""
    G = np.asarray(G, dtype=np.uint8)

    def decode(Ld: np.ndarray):
        Ld = np.atleast_2d(Ld)
        bits = np.zeros(Ld.shape, dtype=np.uint8)
        for d in range(Ld.shape[0]):
            bits[d] = osd_decode(G, Ld[d], order)
        ones = np.ones(Ld.shape[0], dtype=np.int64)
        return bits, ones, ones.astype(bool)
    return decode


def mld_batch_decoder(G: np.ndarray):
    """Batch-decoder closure enumerating a fixed codebook once."""
    C = all_codewords(G)
    S = 1.0 - 2.0 * C.astype(np.float64)

    def decode(Ld: np.ndarray):
        Ld = np.atleast_2d(Ld)
        best = np.argmax(S @ Ld.T, axis=0)
        ones = np.ones(Ld.shape[0], dtype=np.int64)
        return C[best], ones, ones.astype(bool)
    return decode
