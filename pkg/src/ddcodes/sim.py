"""AWGN/BPSK channel, Monte-Carlo block-error-rate harness, config and CSV I/O.

Frames are dealt round-robin to per-worker random-number substreams spawned
from one seed, and processed in global frame order, so a result depends only
on (seed, worker count) and not on how the work is actually scheduled.
"""
from __future__ import annotations

import csv
import json
import os
from dataclasses import asdict, dataclass, field as dc_field

import numpy as np

from .cyclic import CodeSpec, code_from_generator
from .ddcodec import (DirectionSet, dd_decode_cyclic, dd_decode_minimal,
                      flop_account)
from .decoders import (mld_exhaustive, osd_batch_decoder, osd_decode,
                       spa_batch_decoder, spa_decode)
from .derivative import dd_code, minimal_dd_basis
from .gf2 import nullspace
from .gf2m import GF2m, field_for_length
from .parity import SparseParityMatrix, eg_line_parity_matrix, is_orthogonal_to

__all__ = [
    "ChannelConfig", "SimConfig", "SimPoint", "SimResult", "ConfigError",
    "transmit", "build_decoder", "run_monte_carlo",
    "write_results", "save_config", "load_config", "default_workers",
]

ALGOS = ("dd-spa", "dd-osd", "osd", "spa", "mld")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ChannelConfig:
    """Binary-input AWGN channel at a given Eb/N0 and code rate."""
    ebn0_db: float
    rate: float

    @property
    def sigma2(self) -> float:
        if self.rate <= 0:
            raise ConfigError("rate must be positive")
        return 1.0 / (2.0 * self.rate * 10.0 ** (self.ebn0_db / 10.0))


def transmit(a, cfg: ChannelConfig, rng: np.random.Generator) -> np.ndarray:
    """BPSK-modulate (0 -> +1), add noise, return channel LLRs 2y/sigma^2."""
    a = np.asarray(a, dtype=np.float64)
    sigma2 = cfg.sigma2
    y = (1.0 - 2.0 * a) + np.sqrt(sigma2) * rng.standard_normal(a.shape[0])
    return 2.0 * y / sigma2


def default_workers() -> int:
    """Worker count from the DDCODES_WORKERS environment variable (default 1)."""
    try:
        return max(1, int(os.environ.get("DDCODES_WORKERS", "1")))
    except ValueError:
        return 1


@dataclass
class SimConfig:
    """One simulation campaign: code, decoder, SNR sweep, stopping rules."""
    n: int                      # extended block length 2^m
    gen_poly_hex: str           # generator polynomial, bit i = coeff of x^i
    algo: str                   # one of ALGOS
    ebn0_db: list[float] = dc_field(default_factory=lambda: [3.0])
    directions: str = "all"     # "all" or "k:<count>:<seed>"
    order: int = 1              # OSD reprocessing depth
    inner_max_iter: int = 20    # SPA iteration cap
    n_max: int = 3              # outer derivative-decoding iteration cap
    max_frames: int = 1000
    max_frame_errors: int = 100
    seed: int = 1
    workers: int = 0            # 0: take default_workers()
    all_zero: bool = False      # transmit the zero codeword instead of random
    noiseless: bool = False     # saturated correct-sign LLRs (sanity runs)
    omega: float = 0.0          # assumed per-call inner-decoder flops


@dataclass
class SimPoint:
    ebn0_db: float
    frames: int
    frame_errors: int
    bit_errors: int
    bler: float
    avg_dd_iters: float
    avg_inner_iters: float
    flops_est: int


@dataclass
class SimResult:
    config: SimConfig
    points: list[SimPoint]


def _parse_directions(spec_str: str, field: GF2m) -> DirectionSet:
    if spec_str == "all":
        return DirectionSet.all_of(field)
    parts = spec_str.split(":")
    if len(parts) == 3 and parts[0] == "k":
        return DirectionSet.random_subset(field, int(parts[1]), int(parts[2]))
    raise ConfigError(f"cannot parse directions {spec_str!r} (use all | k:<n>:<seed>)")


def _dd_parity_matrix(spec: CodeSpec) -> SparseParityMatrix:
    """Low-weight checks for the cyclic descendant: EG lines when they fit.

    Tries every factorization of m as mu * s with mu >= 2; a line matrix is
    used only if it verifies orthogonal to the descendant's generator.
    Falls back to the dense dual basis.
    """
    descendant = dd_code(spec)
    m = spec.field.m
    for s in range(1, m):
        if m % s:
            continue
        mu = m // s
        if mu < 2:
            continue
        H = eg_line_parity_matrix(mu, s)
        if is_orthogonal_to(H, descendant.G):
            return H
    return SparseParityMatrix.from_dense(nullspace(descendant.G))


def build_decoder(cfg: SimConfig, spec: CodeSpec):
    """Per-frame decode closure: L -> (bits, dd_iters, inner_sum, inner_calls, converged)."""
    field = spec.field
    if cfg.algo not in ALGOS:
        raise ConfigError(f"unknown algo {cfg.algo!r}")
    if cfg.algo == "mld":
        if spec.k > 20:
            raise ConfigError(f"mld needs k <= 20, got {spec.k}")

        def decode(L):
            bits = mld_exhaustive(spec.G, L)
            return bits, 1, 1, 1, True
        return decode
    if cfg.algo == "osd":
        def decode(L):
            bits = osd_decode(spec.G, L, cfg.order)
            return bits, 1, 1, 1, True
        return decode
    if cfg.algo == "spa":
        H = SparseParityMatrix.from_dense(nullspace(spec.G))

        def decode(L):
            bits, conv, its = spa_decode(H, L, cfg.inner_max_iter)
            return bits, 1, its, 1, conv
        return decode

    B = _parse_directions(cfg.directions, field)
    H_outer = nullspace(spec.G)
    if cfg.algo == "dd-spa":
        H_dd = _dd_parity_matrix(spec)
        inner = spa_batch_decoder(H_dd, cfg.inner_max_iter)

        def decode(L):
            rep = dd_decode_cyclic(L, spec, inner, B, cfg.n_max, H_outer,
                                   cfg.omega)
            return (rep.bits, rep.iterations, int(rep.inner_iterations.sum()),
                    rep.inner_iterations.size, rep.converged)
        return decode
    # dd-osd: one OSD engine on the direction-1 minimal descendant
    basis = minimal_dd_basis(spec, 1).basis
    inner = osd_batch_decoder(basis, cfg.order)

    def decode(L):
        rep = dd_decode_minimal(L, spec, inner, B, cfg.n_max, H_outer,
                                cfg.omega)
        return (rep.bits, rep.iterations, int(rep.inner_iterations.sum()),
                rep.inner_iterations.size, rep.converged)
    return decode


def run_monte_carlo(cfg: SimConfig) -> SimResult:
    """Simulate every SNR point until max_frames or max_frame_errors."""
    field = field_for_length(cfg.n)
    spec = code_from_generator(field, int(cfg.gen_poly_hex, 16))
    decode = build_decoder(cfg, spec)
    workers = cfg.workers if cfg.workers >= 1 else default_workers()
    num_dirs = 0
    if cfg.algo.startswith("dd-"):
        num_dirs = len(_parse_directions(cfg.directions, field))
    points = []
    for ebn0 in cfg.ebn0_db:
        chan = ChannelConfig(ebn0, spec.k / spec.n)
        rngs = [np.random.default_rng(s)
                for s in np.random.SeedSequence(cfg.seed).spawn(workers)]
        frames = frame_errors = bit_errors = 0
        dd_iters_sum = 0
        inner_sum = inner_calls = 0
        while frames < cfg.max_frames and frame_errors < cfg.max_frame_errors:
            rng = rngs[frames % workers]
            if cfg.all_zero:
                msg = np.zeros(spec.k, dtype=np.uint8)
            else:
                msg = rng.integers(0, 2, size=spec.k).astype(np.uint8)
            a = msg @ spec.G % 2
            if cfg.noiseless:
                L = (1.0 - 2.0 * a) * 60.0
            else:
                L = transmit(a, chan, rng)
            bits, dd_its, isum, icalls, _ = decode(L)
            frames += 1
            dd_iters_sum += dd_its
            inner_sum += isum
            inner_calls += icalls
            if not np.array_equal(bits, a):
                frame_errors += 1
                bit_errors += int((bits ^ a).sum())
        avg_dd = dd_iters_sum / frames if frames else 0.0
        avg_inner = inner_sum / inner_calls if inner_calls else 0.0
        flops = flop_account(avg_dd, spec.n, num_dirs, cfg.omega) if num_dirs else 0
        points.append(SimPoint(ebn0, frames, frame_errors, bit_errors,
                               frame_errors / frames if frames else 0.0,
                               avg_dd, avg_inner, flops))
    return SimResult(cfg, points)


CSV_COLUMNS = ["ebn0_db", "frames", "frame_errors", "bler",
               "avg_dd_iters", "avg_inner_iters", "flops_est"]


def write_results(result: SimResult, path) -> None:
    """One CSV row per SNR point, fixed column set."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        for p in result.points:
            w.writerow([p.ebn0_db, p.frames, p.frame_errors,
                        f"{p.bler:.6g}", f"{p.avg_dd_iters:.4f}",
                        f"{p.avg_inner_iters:.4f}", p.flops_est])


def save_config(cfg: SimConfig, path) -> None:
    with open(path, "w") as fh:
        json.dump(asdict(cfg), fh, indent=2)
        fh.write("\n")


def load_config(path) -> SimConfig:
    """JSON mirror of SimConfig; missing or unknown fields are named errors."""
    with open(path) as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as e:
            raise ConfigError(f"{path}: not valid JSON ({e})") from e
    fields = {f.name for f in SimConfig.__dataclass_fields__.values()}
    required = {"n", "gen_poly_hex", "algo"}
    for name in required:
        if name not in raw:
            raise ConfigError(f"{path}: missing required field {name!r}")
    unknown = set(raw) - fields
    if unknown:
        raise ConfigError(f"{path}: unknown field(s) {sorted(unknown)}")
    return SimConfig(**raw)
