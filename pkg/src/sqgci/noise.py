"""Spatial white noise, fractional forcing, and empirical regularity.

White noise on T^2: fhat(k) are centered complex Gaussians with covariance
E[xihat(k) xihat(k')] = (2 pi)^-2 1_{k=-k'} and xihat(-k) = conj(xihat(k)).
Half-lattice representatives (k1 > 0, or k1 = 0 and k2 > 0) carry independent
draws; mirrors are conjugates; the zero mode is 0 (mean-free).

Draws come from a Philox stream consumed in a canonical ring order (square
rings r = 1, 2, ..., lexicographic inside each ring), so enlarging the
truncation K appends new draws without changing the low-frequency ones.  That
is what lets successive iteration levels reuse one underlying sample through
P_{<=lambda_n} xi.
"""

from __future__ import annotations

import dataclasses
import functools
import math

import numpy as np

from .spectral import SpectralField, linf_norm, lp_blocks_nonzero, zero_field, _trusted


def _half_ring_sites(r: int) -> list[tuple[int, int]]:
    """Half-lattice representatives on the square ring max(|k1|,|k2|) = r."""
    sites = []
    for k1 in range(-r, r + 1):
        for k2 in range(-r, r + 1):
            if max(abs(k1), abs(k2)) != r:
                continue
            if k1 > 0 or (k1 == 0 and k2 > 0):
                sites.append((k1, k2))
    return sites


@functools.lru_cache(maxsize=64)
def half_lattice_order(K: int) -> tuple[np.ndarray, np.ndarray]:
    """(k1, k2) index arrays of the canonical site order up to ring K."""
    sites: list[tuple[int, int]] = []
    for r in range(1, K + 1):
        sites.extend(_half_ring_sites(r))
    idx = np.asarray(sites, dtype=np.int64)
    idx.flags.writeable = False
    return idx[:, 0], idx[:, 1]


@dataclasses.dataclass(frozen=True)
class NoiseSample:
    """Truncated white-noise sample: mean-free Hermitian field plus provenance."""

    field: SpectralField
    seed: int
    truncation: int


def sample_white_noise(K: int, seed: int) -> NoiseSample:
    """Deterministic white-noise sample with E|xihat(k)|^2 = (2 pi)^-2."""
    if K < 1:
        raise ValueError("truncation K must be >= 1")
    i1, i2 = half_lattice_order(K)
    gen = np.random.Generator(np.random.Philox(key=np.uint64(seed)))
    z = gen.standard_normal(2 * i1.size)
    scale = 1.0 / (2.0 * math.pi * math.sqrt(2.0))
    vals = (z[0::2] + 1j * z[1::2]) * scale
    c = np.zeros((2 * K + 1, 2 * K + 1), dtype=np.complex128)
    c[i1 + K, i2 + K] = vals
    c[K - i1, K - i2] = np.conj(vals)
    return NoiseSample(_trusted(c, K * math.sqrt(2.0)), int(seed), int(K))


@dataclasses.dataclass(frozen=True)
class ForcingSpec:
    """Forcing zeta = Lambda^alpha xi (or a file-loaded field) and its class.

    kappa is the regularity margin: zeta is declared (and empirically
    reported, never asserted) to lie in B^{-2+kappa}_{inf,inf}.
    """

    source: str
    alpha: float
    kappa: float
    seed: int | None = None
    truncation: int | None = None
    path: str | None = None


def make_forcing(xi: NoiseSample, alpha: float) -> SpectralField:
    """zeta = Lambda^alpha xi; only alpha < 1 is within the treated regime."""
    if alpha >= 1.0:
        raise ValueError(
            f"alpha = {alpha} >= 1: forcing rougher than allowed (needs zeta in "
            "B^{-2+kappa}, i.e. Lambda^alpha xi with alpha < 1)")
    K = xi.field.max_freq
    k = np.arange(-K, K + 1)
    mag = np.hypot(k[:, None], k[None, :]) ** float(alpha)
    mag[K, K] = 0.0
    return _trusted(mag * xi.field.coeffs, xi.field.support_radius)


def estimate_regularity(f: SpectralField) -> float:
    """Least-squares Besov-Hoelder exponent from block sup-norms.

    Fits log2 ||Delta_j f||_inf ~ s* j over the nonempty blocks and reports
    -s* (so white noise at large K lands near -1, smooth fields high).  Blocks
    whose annulus is only partially inside the declared support are skipped:
    their depressed norms would bias the slope.
    """
    pts = [(j, nrm) for j, block in lp_blocks_nonzero(f)
           if j >= 0 and 2.0 ** (j + 1) <= f.support_radius
           and (nrm := linf_norm(block)) > 0.0]
    if len(pts) < 4:
        raise ValueError(f"need >= 4 nonempty dyadic blocks, got {len(pts)}")
    js = np.array([p[0] for p in pts], dtype=float)
    ys = np.log2([p[1] for p in pts])
    slope = np.polyfit(js, ys, 1)[0]
    return float(-slope)


def sample_initial_condition(eta: float, K0: int, seed: int,
                             eps: float = 0.1, scale: float = 1.0) -> SpectralField:
    """Random mean-free field lying in C^eta almost surely.

    Coefficient standard deviations decay like |k|^(-eta-1-eps) against
    independent complex Gaussians, support <= K0.
    """
    if eta <= 0.5:
        raise ValueError("eta must be > 1/2")
    if K0 == 0:
        return zero_field(0)
    xi = sample_white_noise(K0, seed)
    K = K0
    k = np.arange(-K, K + 1)
    kabs = np.hypot(k[:, None], k[None, :])
    kabs[K, K] = 1.0
    decay = kabs ** (-(eta + 1.0 + eps))
    decay[K, K] = 0.0
    c = decay * xi.field.coeffs * (2.0 * math.pi * math.sqrt(2.0)) * scale
    c[kabs > K0] = 0.0
    return _trusted(c, float(K0))
