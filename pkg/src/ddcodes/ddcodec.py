"""Derivative decoding: soft derivative combination, voting, and the two loops.

A derivative decoder never decodes the outer code directly.  Each iteration
it forms, for every direction beta in a chosen set B, the LLR vector of the
derivative word (box-plus of the received LLRs over each pair {x, x+beta}),
hands it to a decoder for the (much smaller) descendant code, and converts
the decoded derivative back into per-position soft votes on the original
word.  The votes are averaged across directions to give the next LLR
vector, and the loop stops as soon as the hard decision satisfies the outer
code's parity checks.

Two loops are provided: one decoding every direction against the common
cyclic descendant, and one that reuses a single decoder for the direction-1
minimal descendant by cyclically shifting the problem into that direction
and shifting the votes back.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclic import CodeSpec
from .decoders import LLR_CLIP
from .derivative import ZeroDirectionError
from .gf2 import nullspace
from .gf2m import GF2m, field_for_length
from .parity import SparseParityMatrix

__all__ = [
    "DirectionSet", "DecodeReport",
    "boxplus", "derivative_llr", "get_vote",
    "dd_decode_cyclic", "dd_decode_minimal", "pair_transversal",
    "flop_account",
]

_ATANH_LIM = 1.0 - 1e-12


def boxplus(a, b) -> np.ndarray:
    """LLR of the XOR of two bits with LLRs a and b (exact tanh rule).

    Inputs are clipped to +-30 and the atanh argument is kept away from
    +-1, so saturated inputs stay finite: boxplus(30, -30) is about -28.3,
    not -30.
    """
    a = np.clip(np.asarray(a, dtype=np.float64), -LLR_CLIP, LLR_CLIP)
    b = np.clip(np.asarray(b, dtype=np.float64), -LLR_CLIP, LLR_CLIP)
    p = np.tanh(a / 2) * np.tanh(b / 2)
    p = np.clip(p, -_ATANH_LIM, _ATANH_LIM)
    return np.clip(2 * np.arctanh(p), -LLR_CLIP, LLR_CLIP)


def derivative_llr(L, beta: int, field: GF2m | None = None) -> np.ndarray:
    """LLR vector of the derivative word in direction beta.

    Position of x receives boxplus(L at x, L at x + beta); paired positions
    therefore hold equal values.
    """
    L = np.asarray(L, dtype=np.float64)
    if field is None:
        field = field_for_length(L.shape[0])
    if beta == 0:
        raise ZeroDirectionError("derivative direction must be nonzero")
    return boxplus(L, L[field.pair_permutation(beta)])


def get_vote(L, a_hat, beta: int, field: GF2m | None = None) -> np.ndarray:
    """Soft vote on the original word from a decoded derivative word.

    If the derivative bit at x is right, the bits at x and x + beta agree
    through it, so the partner's LLR vouches for x with the derivative's
    sign: vote at x = (1 - 2 * a_hat at x) * (L at x + beta).
    """
    L = np.asarray(L, dtype=np.float64)
    if field is None:
        field = field_for_length(L.shape[0])
    if beta == 0:
        raise ZeroDirectionError("derivative direction must be nonzero")
    return (1.0 - 2.0 * np.asarray(a_hat, dtype=np.float64)) \
        * L[field.pair_permutation(beta)]


@dataclass(frozen=True)
class DirectionSet:
    """An ordered, duplicate-free set of nonzero derivative directions.

    Elements are kept in ascending order of their discrete log, which fixes
    the summation order of the voting average and so keeps runs
    bit-reproducible.
    """
    elements: tuple[int, ...]
    mode: str

    @classmethod
    def all_of(cls, field: GF2m) -> "DirectionSet":
        return cls(tuple(int(x) for x in field.antilog), "all")

    @classmethod
    def random_subset(cls, field: GF2m, k: int, seed: int) -> "DirectionSet":
        """k distinct directions drawn once from a seeded generator."""
        if not 1 <= k <= field.n:
            raise ValueError(f"cannot draw {k} of {field.n} directions")
        rng = np.random.default_rng(seed)
        exps = np.sort(rng.choice(field.n, size=k, replace=False))
        return cls(tuple(int(field.antilog[e]) for e in exps),
                   f"random-{k}-seed{seed}")

    def exponents(self, field: GF2m) -> list[int]:
        return [int(field.log[b]) for b in self.elements]

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate directions")
        if 0 in self.elements:
            raise ZeroDirectionError("0 is not a direction")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(eq=False)
class DecodeReport:
    """Outcome of one derivative-decoding call."""
    bits: np.ndarray
    iterations: int
    converged: bool
    flops: int
    inner_iterations: np.ndarray   # (iterations, |B|) inner-decoder tallies

    @property
    def avg_inner_iterations(self) -> float:
        return float(self.inner_iterations.mean()) if self.inner_iterations.size else 0.0


def _check_matrix(spec: CodeSpec, H) -> np.ndarray:
    if H is None:
        return nullspace(spec.G).astype(np.int64)
    if isinstance(H, SparseParityMatrix):
        return H.to_dense().astype(np.int64)
    return np.asarray(H, dtype=np.int64)


def _is_codeword(Hd: np.ndarray, hard: np.ndarray) -> bool:
    return not (Hd @ hard % 2).any()


def dd_decode_cyclic(L, spec: CodeSpec, dd_decoder, B: DirectionSet | None = None,
                     N_max: int = 3, H=None, omega: float = 0.0) -> DecodeReport:
    """Derivative decoding with every direction decoded in the cyclic descendant.

    dd_decoder is a batch decoder for the cyclic descendant code: it maps a
    (|B|, 2^m) stack of derivative LLR vectors to (bits, iterations,
    converged).  Per outer iteration the derivative of the running LLR
    vector is decoded in every direction, the soft votes are averaged into
    the new LLR vector, and the loop exits early once the hard decision
    passes the outer code's checks.  `omega` is the assumed inner-decoder
    flop count used for the closed-form flop estimate.
    """
    field = spec.field
    L = np.asarray(L, dtype=np.float64)
    if B is None:
        B = DirectionSet.all_of(field)
    Hd = _check_matrix(spec, H)
    perms = np.stack([field.pair_permutation(b) for b in B.elements])
    Lcur = L.copy()
    hard = (Lcur < 0).astype(np.uint8)
    inner_tallies = []
    converged = False
    it = 0
    for it in range(1, N_max + 1):
        Lp = Lcur[perms]
        Ld = boxplus(Lcur[None, :], Lp)
        bits, inner_its, _ = dd_decoder(Ld)
        inner_tallies.append(np.asarray(inner_its, dtype=np.int64))
        votes = (1.0 - 2.0 * bits.astype(np.float64)) * Lp
        Lcur = votes.mean(axis=0)
        hard = (Lcur < 0).astype(np.uint8)
        if _is_codeword(Hd, hard):
            converged = True
            break
    tallies = np.stack(inner_tallies) if inner_tallies else np.zeros((0, len(B)), dtype=np.int64)
    return DecodeReport(hard, it, converged,
                        flop_account(it, spec.n, len(B), omega), tallies)


def pair_transversal(field: GF2m) -> tuple[np.ndarray, np.ndarray]:
    """Transversal of the direction-1 pairs {x, x + 1} and the slot map.

    Returns (T, slot): T lists one position per pair (the even field
    elements, ascending), and slot[p] is the index in T of p's pair, so
    expanding a transversal word w to full length is w[slot].
    """
    T = np.array([field.pos_of_elem[e] for e in range(0, field.size, 2)],
                 dtype=np.int64)
    slot = np.zeros(field.size, dtype=np.int64)
    for i, p in enumerate(T):
        slot[p] = i
        slot[field.pos_of_elem[field.elem_at_pos[p] ^ 1]] = i
    return T, slot


def dd_decode_minimal(L, spec: CodeSpec, mdd_decoder, B: DirectionSet | None = None,
                      N_max: int = 4, H=None, omega: float = 0.0,
                      transversal: tuple[np.ndarray, np.ndarray] | None = None,
                      ) -> DecodeReport:
    """Derivative decoding through one decoder for the direction-1 descendant.

    For a direction alpha^b, shifting the problem b places turns it into a
    direction-alpha^0 problem: the derivative of the b-shifted LLR vector in
    direction 1 is decoded by mdd_decoder, votes are taken in the shifted
    domain, and shifting b places back aligns them with the original word.
    All directions in B are processed each iteration in one batch.

    With `transversal=(T, slot)` from pair_transversal, mdd_decoder sees
    only the |T| distinct pair values (derivative words repeat every value
    at both pair positions) and its output is expanded back via slot.
    """
    field = spec.field
    L = np.asarray(L, dtype=np.float64)
    if B is None:
        B = DirectionSet.all_of(field)
    Hd = _check_matrix(spec, H)
    shifts = [e if e > 0 else field.n for e in B.exponents(field)]
    sidx = np.stack([field.shift_index(b) for b in shifts])
    perm1 = field.pair_permutation(1)
    Lcur = L.copy()
    hard = (Lcur < 0).astype(np.uint8)
    inner_tallies = []
    converged = False
    it = 0
    for it in range(1, N_max + 1):
        Ls = Lcur[sidx]
        Lp = Ls[:, perm1]
        Ld = boxplus(Ls, Lp)
        if transversal is None:
            bits, inner_its, _ = mdd_decoder(Ld)
        else:
            T, slot = transversal
            bits_t, inner_its, _ = mdd_decoder(Ld[:, T])
            bits = bits_t[:, slot]
        inner_tallies.append(np.asarray(inner_its, dtype=np.int64))
        votes_shifted = (1.0 - 2.0 * bits.astype(np.float64)) * Lp
        votes = np.zeros_like(votes_shifted)
        np.put_along_axis(votes, sidx, votes_shifted, axis=1)
        Lcur = votes.mean(axis=0)
        hard = (Lcur < 0).astype(np.uint8)
        if _is_codeword(Hd, hard):
            converged = True
            break
    tallies = np.stack(inner_tallies) if inner_tallies else np.zeros((0, len(B)), dtype=np.int64)
    return DecodeReport(hard, it, converged,
                        flop_account(it, spec.n, len(B), omega), tallies)


def flop_account(report_or_iterations, n: int, num_directions: int,
                 omega: float) -> int:
    """Closed-form flop estimate: iterations * |B| * (5n + omega).

    Per iteration each direction costs 4n for the derivative combination
    plus n for its share of the voting average, plus one descendant decode
    at omega flops.  Accepts a DecodeReport or a (possibly fractional,
    e.g. averaged) iteration count; the result rounds to the nearest
    integer.
    """
    iters = report_or_iterations.iterations \
        if isinstance(report_or_iterations, DecodeReport) else report_or_iterations
    return int(round(iters * num_directions * (5.0 * n + omega)))
