"""Tests for the channel model, Monte-Carlo harness, and config round-trips."""

from __future__ import annotations

import numpy as np
import pytest

from ddcodes.cyclic import code_from_generator
from ddcodes.gf2m import GF2m
from ddcodes.sim import (
    ChannelConfig,
    ConfigError,
    SimConfig,
    build_decoder,
    default_workers,
    load_config,
    run_monte_carlo,
    save_config,
    transmit,
    write_results,
)


def test_noise_variance_formula():
    cfg = ChannelConfig(3.0, 7.0 / 16.0)
    expected = 1.0 / (2.0 * (7.0 / 16.0) * 10.0 ** 0.3)
    assert cfg.sigma2 == pytest.approx(expected)
    # higher SNR, lower noise
    assert ChannelConfig(6.0, 0.5).sigma2 < ChannelConfig(3.0, 0.5).sigma2
    with pytest.raises(ConfigError):
        ChannelConfig(3.0, 0.0).sigma2


def test_transmit_statistics():
    cfg = ChannelConfig(2.0, 0.5)
    sigma2 = cfg.sigma2
    rng = np.random.default_rng(283)
    L = transmit(np.zeros(100_000), cfg, rng)
    # L = 2y/sigma^2 with y ~ N(+1, sigma^2): mean 2/sigma^2, var 4/sigma^2
    mean, var = 2.0 / sigma2, 4.0 / sigma2
    assert L.mean() == pytest.approx(mean, abs=5 * np.sqrt(var / 1e5))
    assert L.var() == pytest.approx(var, rel=0.05)
    # sign flips with the transmitted bit
    L1 = transmit(np.ones(100_000), cfg, np.random.default_rng(283))
    assert L1.mean() == pytest.approx(-mean, abs=5 * np.sqrt(var / 1e5))


def test_transmit_is_deterministic_per_seed():
    cfg = ChannelConfig(1.0, 0.4)
    a = np.zeros(64)
    L1 = transmit(a, cfg, np.random.default_rng(5))
    L2 = transmit(a, cfg, np.random.default_rng(5))
    assert np.array_equal(L1, L2)
    L3 = transmit(a, cfg, np.random.default_rng(6))
    assert not np.array_equal(L1, L3)


def test_default_workers_env(monkeypatch):
    monkeypatch.delenv("DDCODES_WORKERS", raising=False)
    assert default_workers() == 1
    monkeypatch.setenv("DDCODES_WORKERS", "4")
    assert default_workers() == 4
    monkeypatch.setenv("DDCODES_WORKERS", "junk")
    assert default_workers() == 1
    monkeypatch.setenv("DDCODES_WORKERS", "-2")
    assert default_workers() == 1


def _base_config(**kw):
    base = dict(n=16, gen_poly_hex="1d1", algo="mld", ebn0_db=[3.0],
                max_frames=300, max_frame_errors=50, seed=11)
    base.update(kw)
    return SimConfig(**base)


def test_noiseless_run_is_error_free():
    result = run_monte_carlo(_base_config(noiseless=True, max_frames=50))
    point = result.points[0]
    assert point.frames == 50
    assert point.frame_errors == 0
    assert point.bler == 0.0
    assert point.bit_errors == 0


def test_runs_are_reproducible():
    cfg = _base_config(ebn0_db=[1.0, 3.0])
    p1 = run_monte_carlo(cfg).points
    p2 = run_monte_carlo(cfg).points
    assert [vars(a) for a in p1] == [vars(b) for b in p2]
    p3 = run_monte_carlo(_base_config(ebn0_db=[1.0, 3.0], seed=12)).points
    assert [vars(a) for a in p1] != [vars(c) for c in p3]


def test_worker_split_is_reproducible():
    cfg = _base_config(workers=3, ebn0_db=[1.0])
    p1 = run_monte_carlo(cfg).points[0]
    p2 = run_monte_carlo(cfg).points[0]
    assert vars(p1) == vars(p2)


def test_error_budget_stops_early():
    point = run_monte_carlo(_base_config(
        ebn0_db=[-2.0], max_frames=5000, max_frame_errors=25)).points[0]
    assert point.frame_errors >= 25
    assert point.frames < 5000
    assert point.bler == point.frame_errors / point.frames
    assert point.bit_errors >= point.frame_errors


def test_bler_decreases_with_snr():
    result = run_monte_carlo(_base_config(
        ebn0_db=[-2.0, 4.0], max_frames=400, max_frame_errors=400))
    lo, hi = result.points
    assert lo.bler > hi.bler


def test_all_zero_codeword_option():
    point = run_monte_carlo(_base_config(
        all_zero=True, ebn0_db=[0.0], max_frames=300,
        max_frame_errors=300)).points[0]
    ref = run_monte_carlo(_base_config(
        ebn0_db=[0.0], max_frames=300, max_frame_errors=300)).points[0]
    # decoding a linear code: the zero word behaves like any other
    assert point.frames == ref.frames == 300
    assert abs(point.bler - ref.bler) < 0.15


def test_dd_run_reports_direction_flops():
    cfg = _base_config(algo="dd-spa", noiseless=True, max_frames=20,
                       omega=100.0)
    point = run_monte_carlo(cfg).points[0]
    assert point.frame_errors == 0
    assert point.avg_dd_iters == 1.0
    # 1 outer iteration, 15 directions, 5n + omega per direction
    assert point.flops_est == 15 * (5 * 16 + 100)
    assert point.avg_inner_iters >= 1.0


def test_dd_direction_subset():
    cfg = _base_config(algo="dd-osd", directions="k:4:7", noiseless=True,
                       max_frames=10, n_max=4)
    point = run_monte_carlo(cfg).points[0]
    assert point.frame_errors == 0
    with pytest.raises(ConfigError):
        run_monte_carlo(_base_config(algo="dd-spa", directions="bogus",
                                     max_frames=5))


def test_decoder_contracts():
    spec = code_from_generator(GF2m(4), 0x1D1)
    word = np.zeros(16)
    L = 8.0 * (1.0 - 2.0 * word)
    for algo in ("mld", "osd", "spa", "dd-spa", "dd-osd"):
        decode = build_decoder(_base_config(algo=algo), spec)
        bits, dd_its, inner_sum, inner_calls, conv = decode(L)
        assert np.array_equal(bits, word), algo
        assert dd_its >= 1 and inner_calls >= 1 and conv


def test_unknown_algo_rejected():
    spec = code_from_generator(GF2m(4), 0x1D1)
    with pytest.raises(ConfigError):
        build_decoder(_base_config(algo="turbo"), spec)


def test_mld_dimension_guard():
    spec = code_from_generator(GF2m(6), 0x782CF)  # k = 45
    with pytest.raises(ConfigError):
        build_decoder(_base_config(algo="mld"), spec)


def test_results_csv(tmp_path):
    result = run_monte_carlo(_base_config(
        ebn0_db=[1.0, 2.0], max_frames=50, max_frame_errors=50))
    path = tmp_path / "out.csv"
    write_results(result, path)
    lines = path.read_text().strip().split("\n")
    assert lines[0] == "ebn0_db,frames,frame_errors,bler,avg_dd_iters,avg_inner_iters,flops_est"
    assert len(lines) == 3
    first = lines[1].split(",")
    assert float(first[0]) == 1.0
    assert int(first[1]) == 50


def test_config_roundtrip(tmp_path):
    cfg = _base_config(algo="dd-spa", directions="k:8:3", omega=250.0)
    path = tmp_path / "cfg.json"
    save_config(cfg, path)
    assert load_config(path) == cfg


def test_config_schema_errors(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"n": 16, "algo": "mld"}')
    with pytest.raises(ConfigError, match="gen_poly_hex"):
        load_config(path)
    path.write_text('{"n": 16, "gen_poly_hex": "1d1", "algo": "mld", "turbo": 1}')
    with pytest.raises(ConfigError, match="turbo"):
        load_config(path)
    path.write_text("not json")
    with pytest.raises(ConfigError, match="JSON"):
        load_config(path)
