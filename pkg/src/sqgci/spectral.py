"""Exact band-limited harmonic analysis on the 2-torus.

Fields are real trigonometric polynomials stored as complex Fourier
coefficients with Hermitian symmetry, using the convention

    f(x) = sum_k  fhat(k) e^{i k.x},      fhat(k) = (2 pi)^-2 \\int f e^{-i k.x} dx,

so the coefficient array *is* the function.  Coefficients live on the square
|k_1|, |k_2| <= K; every field additionally declares a Euclidean support
radius S and keeps coefficients outside |k| <= S as exact zeros.  Nonlinear
products are computed alias-free on zero-padded grids, which is what makes
the iteration's Reynolds identity checkable to roundoff.

L^p norms of trigonometric polynomials are evaluated on an oversampled
physical grid (a documented lower bound on the true sup); all pass/fail
support and symmetry checks are coefficient-exact instead.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Callable

import numpy as np
from scipy import fft as sfft


def next_fast_grid(n: int) -> int:
    """Smallest FFT-friendly grid size >= n (even, for rfft symmetry)."""
    m = sfft.next_fast_len(int(n), real=True)
    while m % 2:
        m = sfft.next_fast_len(m + 1, real=True)
    return m


@dataclasses.dataclass(frozen=True)
class FourierGrid:
    """Discretization bookkeeping for one field.

    max_freq: coefficients stored for |k_i| <= K.
    phys_size: points per dimension for plain point evaluation (>= 2K+2).
    oversample: factor for sup-norm evaluation grids.
    """

    max_freq: int
    phys_size: int
    oversample: float = 4.0

    def __post_init__(self):
        if self.max_freq < 0:
            raise ValueError("max_freq must be >= 0")
        if self.phys_size < 2 * self.max_freq + 2:
            raise ValueError(
                f"phys_size {self.phys_size} < Nyquist bound {2 * self.max_freq + 2}"
            )
        if self.oversample < 1.0:
            raise ValueError("oversample must be >= 1")

    @classmethod
    def for_max_freq(cls, K: int, oversample: float = 4.0) -> "FourierGrid":
        return cls(K, next_fast_grid(2 * K + 2), oversample)

    def eval_size(self) -> int:
        """Grid size used for sup-norm evaluation."""
        return next_fast_grid(int(math.ceil(self.oversample * (2 * self.max_freq + 2))))


def _k_components(K: int):
    k = np.arange(-K, K + 1)
    return k[:, None], k[None, :]


def _k_sq(K: int) -> np.ndarray:
    k1, k2 = _k_components(K)
    return (k1 * k1 + k2 * k2).astype(np.float64)


class SpectralField:
    """Real band-limited field on T^2; immutable by contract.

    coeffs[i, j] is fhat(i-K, j-K).  support_radius is the declared Euclidean
    radius; entries with |k| > support_radius are exact zeros.
    """

    __slots__ = ("grid", "coeffs", "support_radius")

    def __init__(self, coeffs: np.ndarray, support_radius: float | None = None,
                 grid: FourierGrid | None = None, check: bool = True,
                 _trust: bool = False):
        coeffs = np.asarray(coeffs, dtype=np.complex128)
        if coeffs.ndim != 2 or coeffs.shape[0] != coeffs.shape[1] or coeffs.shape[0] % 2 == 0:
            raise ValueError("coeffs must be (2K+1) x (2K+1)")
        K = coeffs.shape[0] // 2
        if grid is None:
            grid = FourierGrid.for_max_freq(K)
        elif grid.max_freq != K:
            raise ValueError("grid.max_freq does not match coefficient array")
        if support_radius is None:
            support_radius = K * math.sqrt(2.0)
        if _trust:
            self.grid = grid
            self.coeffs = coeffs
            self.support_radius = float(support_radius)
            return
        if check:
            mirrored = np.conj(coeffs[::-1, ::-1])
            if not np.allclose(coeffs, mirrored, rtol=0.0, atol=1e-12 * (1.0 + np.abs(coeffs).max())):
                raise ValueError("coefficients are not Hermitian-symmetric (field not real)")
        # exact symmetrization + exact support zeros
        coeffs = 0.5 * (coeffs + np.conj(coeffs[::-1, ::-1]))
        if support_radius < K * math.sqrt(2.0):
            coeffs = coeffs.copy()
            coeffs[_k_sq(K) > float(support_radius) ** 2 * (1 + 1e-12)] = 0.0
        coeffs.flags.writeable = False
        self.grid = grid
        self.coeffs = coeffs
        self.support_radius = float(support_radius)

    # -- basic structure ---------------------------------------------------

    @property
    def max_freq(self) -> int:
        return self.coeffs.shape[0] // 2

    @property
    def mean_free(self) -> bool:
        K = self.max_freq
        return self.coeffs[K, K] == 0.0

    def coeff(self, k1: int, k2: int) -> complex:
        K = self.max_freq
        if abs(k1) > K or abs(k2) > K:
            return 0.0 + 0.0j
        return complex(self.coeffs[k1 + K, k2 + K])

    def with_max_freq(self, K_new: int) -> "SpectralField":
        """Embed (or crop, if content allows) into a (2K_new+1)^2 array."""
        K = self.max_freq
        if K_new == K:
            return self
        out = np.zeros((2 * K_new + 1, 2 * K_new + 1), dtype=np.complex128)
        m = min(K, K_new)
        out[K_new - m:K_new + m + 1, K_new - m:K_new + m + 1] = \
            self.coeffs[K - m:K + m + 1, K - m:K + m + 1]
        if K_new < K:
            tail = self.coeffs.copy()
            tail[K - K_new:K + K_new + 1, K - K_new:K + K_new + 1] = 0.0
            if np.any(tail):
                raise ValueError("cropping would drop nonzero coefficients")
        f = SpectralField.__new__(SpectralField)
        out.flags.writeable = False
        f.grid = FourierGrid.for_max_freq(K_new, self.grid.oversample)
        f.coeffs = out
        f.support_radius = min(self.support_radius, K_new * math.sqrt(2.0))
        return f

    def shrink_to_support(self) -> "SpectralField":
        K_new = min(self.max_freq, int(math.floor(self.support_radius)))
        return self.with_max_freq(K_new) if K_new < self.max_freq else self

    # -- arithmetic (pure; coefficient-wise) --------------------------------

    def __add__(self, other: "SpectralField") -> "SpectralField":
        K = max(self.max_freq, other.max_freq)
        a = self.with_max_freq(K).coeffs
        b = other.with_max_freq(K).coeffs
        return _trusted(a + b, max(self.support_radius, other.support_radius))

    def __sub__(self, other: "SpectralField") -> "SpectralField":
        K = max(self.max_freq, other.max_freq)
        a = self.with_max_freq(K).coeffs
        b = other.with_max_freq(K).coeffs
        return _trusted(a - b, max(self.support_radius, other.support_radius))

    def __mul__(self, c: float) -> "SpectralField":
        return _trusted(self.coeffs * float(c), self.support_radius)

    __rmul__ = __mul__

    def __neg__(self) -> "SpectralField":
        return _trusted(-self.coeffs, self.support_radius)

    # -- evaluation ----------------------------------------------------------

    def values(self, n: int | None = None) -> np.ndarray:
        """Point values on the n x n grid x_j = 2 pi j / n (exact for n >= 2K+2)."""
        if n is None:
            n = self.grid.phys_size
        K = self.max_freq
        if n < 2 * K + 2:
            raise ValueError(f"grid size {n} too small for K={K}")
        half = np.zeros((n, n // 2 + 1), dtype=np.complex128)
        K_arr = np.arange(-K, K + 1)
        rows = K_arr % n
        half[rows[:, None], np.arange(0, K + 1)[None, :]] = self.coeffs[:, K:]
        # k2 = 0 column must list each k1 exactly once; rows above handle it
        return sfft.irfft2(half, s=(n, n)) * (n * n)

    def zero_like(self) -> "SpectralField":
        return _trusted(np.zeros_like(self.coeffs), 0.0)


def _trusted(coeffs: np.ndarray, support_radius: float) -> SpectralField:
    """Internal constructor for arrays already Hermitian with enforced zeros."""
    K = coeffs.shape[0] // 2
    support_radius = float(min(support_radius, K * math.sqrt(2.0)))
    coeffs = np.ascontiguousarray(coeffs)
    coeffs.flags.writeable = False
    f = SpectralField.__new__(SpectralField)
    f.grid = FourierGrid.for_max_freq(K)
    f.coeffs = coeffs
    f.support_radius = support_radius
    return f


def _mask_support(coeffs: np.ndarray, radius: float) -> np.ndarray:
    K = coeffs.shape[0] // 2
    out = coeffs.copy()
    out[_k_sq(K) > float(radius) ** 2 * (1 + 1e-12)] = 0.0
    return out


def field_from_modes(K: int, modes: dict[tuple[int, int], complex],
                     support_radius: float | None = None) -> SpectralField:
    """Build a field from {k: coefficient}; the mirror -k is filled in."""
    c = np.zeros((2 * K + 1, 2 * K + 1), dtype=np.complex128)
    for (k1, k2), v in modes.items():
        c[k1 + K, k2 + K] += v
        if (k1, k2) != (0, 0):
            c[-k1 + K, -k2 + K] += np.conj(v)
    return SpectralField(c, support_radius=support_radius)


def zero_field(K: int = 0) -> SpectralField:
    return _trusted(np.zeros((2 * K + 1, 2 * K + 1), dtype=np.complex128), 0.0)


# -- transforms ---------------------------------------------------------------


def forward_transform(values: np.ndarray, max_freq: int | None = None) -> SpectralField:
    """Exact DFT of real point values on a uniform n x n grid.

    With max_freq K (default: largest resolvable, floor((n-2)/2)) returns the
    coefficients fhat(k) for |k_i| <= K.  Exact for band-limited input with
    n >= 2K+2; otherwise it is the grid projection (aliased tail folded in).
    """
    values = np.asarray(values, dtype=np.float64)
    if values.ndim != 2 or values.shape[0] != values.shape[1]:
        raise ValueError("values must be a square 2-d real array")
    n = values.shape[0]
    K = (n - 2) // 2 if max_freq is None else int(max_freq)
    if n < 2 * K + 2:
        raise ValueError(f"grid size {n} too small for K={K}")
    half = sfft.rfft2(values) / (n * n)
    c = np.empty((2 * K + 1, 2 * K + 1), dtype=np.complex128)
    rows = np.arange(-K, K + 1) % n
    c[:, K:] = half[rows[:, None], np.arange(0, K + 1)[None, :]]
    # exact Hermitian fill: fhat(k1,k2) = conj(fhat(-k1,-k2)) for k2 < 0
    c[:, :K] = np.conj(c[::-1, K + 1:][:, ::-1])
    return _trusted(c, K * math.sqrt(2.0))


def inverse_transform(f: SpectralField, n: int | None = None) -> np.ndarray:
    """Point values of f (alias of SpectralField.values)."""
    return f.values(n)


# -- multipliers ---------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class Multiplier:
    """Fourier multiplier with declared parity.

    symbol(k1, k2) is evaluated on integer arrays with k != 0; value_at_zero
    covers the k = 0 mode.  parity is "real-even" (m(-k) = m(k), real) or
    "imag-odd" (m(-k) = -m(k), purely imaginary); anything else breaks the
    reality of real fields and is rejected at application time.
    """

    symbol: Callable[[np.ndarray, np.ndarray], np.ndarray]
    parity: str
    value_at_zero: complex = 0.0
    name: str = ""

    def table(self, K: int) -> np.ndarray:
        k1, k2 = _k_components(K)
        k1b = np.broadcast_to(k1, (2 * K + 1, 2 * K + 1)).astype(np.float64)
        k2b = np.broadcast_to(k2, (2 * K + 1, 2 * K + 1)).astype(np.float64)
        with np.errstate(divide="ignore", invalid="ignore"):
            m = np.asarray(self.symbol(k1b, k2b), dtype=np.complex128)
        m[K, K] = self.value_at_zero
        mirrored = m[::-1, ::-1]
        if self.parity == "real-even":
            ok = np.allclose(m.imag, 0.0, atol=1e-14) and np.allclose(m, mirrored, rtol=1e-13, atol=1e-300)
        elif self.parity == "imag-odd":
            ok = np.allclose(m.real, 0.0, atol=1e-14) and np.allclose(m, -mirrored, rtol=1e-13, atol=1e-300)
        else:
            raise ValueError(f"unknown parity {self.parity!r}")
        if not ok:
            raise ValueError(f"symbol {self.name or self.symbol!r} violates declared parity "
                             f"{self.parity}; would break reality of real fields")
        return m


def apply_multiplier(f: SpectralField, m: Multiplier) -> SpectralField:
    out = m.table(f.max_freq) * f.coeffs
    return _trusted(out, f.support_radius)


def _require_mean_free(f: SpectralField, op: str):
    if not f.mean_free:
        raise ValueError(f"{op} requires a mean-free field (fhat(0) = {f.coeff(0, 0)})")


def fractional_laplacian(f: SpectralField, s: float) -> SpectralField:
    """Lambda^s = (-Delta)^{s/2}: symbol |k|^s, zero mode -> 0."""
    if s < 0:
        _require_mean_free(f, f"Lambda^{s}")
    m = Multiplier(lambda k1, k2: np.hypot(k1, k2) ** s, "real-even", 0.0, f"Lambda^{s}")
    return apply_multiplier(f, m)


def riesz(f: SpectralField, j: int) -> SpectralField:
    """Riesz transform R_j, symbol i k_j / |k|."""
    if j not in (1, 2):
        raise ValueError("j must be 1 or 2")
    _require_mean_free(f, f"R_{j}")
    def sym(k1, k2):
        kj = k1 if j == 1 else k2
        return 1j * kj / np.hypot(k1, k2)
    return apply_multiplier(f, Multiplier(sym, "imag-odd", 0.0, f"R_{j}"))


def riesz_odd_symbol(j: int) -> Multiplier:
    """The construction's Riesz-type transforms with explicit real even symbols."""
    if j == 1:
        def sym(k1, k2):
            return 25.0 * (k2 * k2 - k1 * k1) / (12.0 * (k1 * k1 + k2 * k2))
    elif j == 2:
        def sym(k1, k2):
            kk = k1 * k1 + k2 * k2
            return 7.0 * (k2 * k2 - k1 * k1) / (12.0 * kk) + 4.0 * k1 * k2 / kk
    else:
        raise ValueError("j must be 1 or 2")
    return Multiplier(sym, "real-even", 0.0, f"R^o_{j}")


def riesz_odd(f: SpectralField, j: int) -> SpectralField:
    _require_mean_free(f, f"R^o_{j}")
    return apply_multiplier(f, riesz_odd_symbol(j))


def derivative(f: SpectralField, j: int) -> SpectralField:
    def sym(k1, k2):
        return 1j * (k1 if j == 1 else k2)
    return apply_multiplier(f, Multiplier(sym, "imag-odd", 0.0, f"d_{j}"))


# -- Littlewood-Paley -----------------------------------------------------------


def _smooth_step(u: np.ndarray) -> np.ndarray:
    """C-infinity monotone bridge: 1 at u<=0, 0 at u>=1."""
    u = np.clip(u, 0.0, 1.0)
    with np.errstate(divide="ignore", over="ignore"):
        a = np.where(u < 1.0, np.exp(-1.0 / np.maximum(1.0 - u, 1e-300)), 0.0)
        b = np.where(u > 0.0, np.exp(-1.0 / np.maximum(u, 1e-300)), 0.0)
    return a / (a + b)


def _cos2_step(u: np.ndarray) -> np.ndarray:
    u = np.clip(u, 0.0, 1.0)
    return np.cos(0.5 * np.pi * u) ** 2


_BRIDGES = {"smooth": _smooth_step, "cos2": _cos2_step}


@dataclasses.dataclass(frozen=True)
class LPPartition:
    """Radial cutoff psi (1 on r<=1/2, 0 on r>=1) and dyadic block profiles.

    rho_{-1} = psi, rho_j(k) = psi(k/2^{j+1}) - psi(k/2^j); the partition of
    unity sum_j rho_j = 1 is exact on band-limited fields (telescoping with
    exact plateaus).  The bridge on (1/2, 1) is configurable.
    """

    bridge: str = "smooth"

    def psi(self, r: np.ndarray) -> np.ndarray:
        r = np.abs(np.asarray(r, dtype=np.float64))
        step = _BRIDGES[self.bridge]
        out = np.where(r <= 0.5, 1.0, np.where(r >= 1.0, 0.0, step(2.0 * r - 1.0)))
        return out

    def block_profile(self, j: int, r: np.ndarray) -> np.ndarray:
        if j < -1:
            raise ValueError("LP block index must be >= -1")
        if j == -1:
            return self.psi(r)
        return self.psi(r / 2.0 ** (j + 1)) - self.psi(r / 2.0 ** j)


DEFAULT_LP = LPPartition()


def project_leq(f: SpectralField, lam: float, lp: LPPartition = DEFAULT_LP) -> SpectralField:
    """Smooth low-pass P_{<=lam}: psi(k/lam) fhat(k); identity on |k| <= lam/2."""
    if lam < 1.0:
        raise ValueError("projection level must be >= 1")
    m = Multiplier(lambda k1, k2: lp.psi(np.hypot(k1, k2) / lam) + 0.0j,
                   "real-even", 1.0, f"P_<= {lam}")
    out = m.table(f.max_freq) * f.coeffs
    g = _trusted(_mask_support(out, lam), min(f.support_radius, lam))
    return g


def lp_block(f: SpectralField, j: int, lp: LPPartition = DEFAULT_LP) -> SpectralField:
    """Littlewood-Paley block Delta_j."""
    at_zero = 1.0 if j == -1 else 0.0
    m = Multiplier(lambda k1, k2: lp.block_profile(j, np.hypot(k1, k2)) + 0.0j,
                   "real-even", at_zero, f"Delta_{j}")
    out = m.table(f.max_freq) * f.coeffs
    hi = 2.0 ** (j + 1)
    return _trusted(_mask_support(out, hi), min(f.support_radius, hi))


def lp_blocks_nonzero(f: SpectralField, lp: LPPartition = DEFAULT_LP):
    """(j, Delta_j f) for every block that can be nonzero for this support."""
    if f.support_radius <= 0:
        return [(-1, f)]
    jmax = max(0, int(math.ceil(math.log2(max(f.support_radius, 1.0)))) + 1)
    out = []
    for j in range(-1, jmax + 1):
        if j >= 0 and 2.0 ** (j - 1) > f.support_radius:
            break
        out.append((j, lp_block(f, j, lp)))
    return out


# -- norms -----------------------------------------------------------------------


def l2_norm(f: SpectralField) -> float:
    """Parseval: ||f||_{L^2}^2 = (2 pi)^2 sum |fhat|^2, exact."""
    return 2.0 * math.pi * float(np.sqrt(np.sum(np.abs(f.coeffs) ** 2)))


def linf_norm(f: SpectralField) -> float:
    """Sup over the oversampled grid (lower bound on the true sup)."""
    if not np.any(f.coeffs):
        return 0.0
    return float(np.abs(f.values(f.grid.eval_size())).max())


def lp_norm(f: SpectralField, p: float) -> float:
    """L^p quadrature norm on the oversampled grid; p = inf -> linf_norm."""
    if math.isinf(p):
        return linf_norm(f)
    if p < 1:
        raise ValueError("p must be in [1, inf]")
    v = f.values(f.grid.eval_size())
    n = v.shape[0]
    cell = (2.0 * math.pi / n) ** 2
    return float((np.sum(np.abs(v) ** p) * cell) ** (1.0 / p))


def besov_norm(f: SpectralField, alpha: float, p: float, q: float,
               lp: LPPartition = DEFAULT_LP) -> float:
    """B^alpha_{p,q} via dyadic blocks; q = inf takes the sup over j."""
    terms = []
    for j, block in lp_blocks_nonzero(f, lp):
        nrm = lp_norm(block, p)
        if nrm > 0.0:
            terms.append(2.0 ** (j * alpha) * nrm)
    if not terms:
        return 0.0
    t = np.asarray(terms)
    if math.isinf(q):
        return float(t.max())
    return float((t ** q).sum() ** (1.0 / q))


def x_norm(f: SpectralField) -> float:
    """||q||_X = ||q||_inf + sum_j ||R^o_j q||_inf (amplitude-control norm)."""
    _require_mean_free(f, "X-norm")
    return linf_norm(f) + linf_norm(riesz_odd(f, 1)) + linf_norm(riesz_odd(f, 2))


def inner_product(f: SpectralField, g: SpectralField) -> float:
    """<f, g> = \\int f g dx = (2 pi)^2 sum fhat conj(ghat), exact."""
    K = max(f.max_freq, g.max_freq)
    a = f.with_max_freq(K).coeffs
    b = g.with_max_freq(K).coeffs
    return (2.0 * math.pi) ** 2 * float(np.real(np.sum(a * np.conj(b))))


# -- nonlinear / composite operations ----------------------------------------------


def product(f: SpectralField, g: SpectralField) -> SpectralField:
    """Exact coefficients of the pointwise product fg (alias-free zero padding)."""
    Kp = f.max_freq + g.max_freq
    n = next_fast_grid(2 * Kp + 2)
    vals = f.values(n) * g.values(n)
    out = forward_transform(vals, Kp)
    return _trusted(_mask_support(out.coeffs, f.support_radius + g.support_radius),
                    f.support_radius + g.support_radius)


def perp_velocity(theta: SpectralField) -> tuple[SpectralField, SpectralField]:
    """u = grad^perp Lambda^{-1} theta = (-R_2 theta, R_1 theta); div-free."""
    _require_mean_free(theta, "perp_velocity")
    return -riesz(theta, 2), riesz(theta, 1)


def divergence(v1: SpectralField, v2: SpectralField) -> SpectralField:
    return derivative(v1, 1) + derivative(v2, 2)


def inverse_div(v1: SpectralField, v2: SpectralField) -> SpectralField:
    """q = Delta^{-1} div v: qhat(k) = -i k.vhat(k)/|k|^2, qhat(0) = 0.

    Exact left inverse of grad on mean-free scalars; annihilates perp
    gradients exactly.
    """
    _require_mean_free(v1, "inverse_div")
    _require_mean_free(v2, "inverse_div")
    K = max(v1.max_freq, v2.max_freq)
    a = v1.with_max_freq(K)
    b = v2.with_max_freq(K)
    k1, k2 = _k_components(K)
    ksq = _k_sq(K)
    ksq[K, K] = 1.0
    out = -1j * (k1 * a.coeffs + k2 * b.coeffs) / ksq
    out[K, K] = 0.0
    return _trusted(_mask_support(out, max(a.support_radius, b.support_radius)),
                    max(a.support_radius, b.support_radius))


def mean_free_part(f: SpectralField) -> SpectralField:
    if f.mean_free:
        return f
    K = f.max_freq
    c = f.coeffs.copy()
    c[K, K] = 0.0
    return _trusted(c, f.support_radius)


def commutator_bracket(theta: SpectralField, g: SpectralField, j: int) -> SpectralField:
    """[R_j ., g] theta = R_j(g theta) - g R_j theta, alias-free."""
    _require_mean_free(theta, "commutator")
    gt = mean_free_part(product(g, theta))
    return riesz(gt, j) - product(g, riesz(theta, j))


def commutator(theta: SpectralField, psi: SpectralField) -> SpectralField:
    """[R^perp ., grad psi] theta = -[R_2 ., d_1 psi] theta + [R_1 ., d_2 psi] theta."""
    g1 = derivative(psi, 1)
    g2 = derivative(psi, 2)
    return -commutator_bracket(theta, g1, 2) + commutator_bracket(theta, g2, 1)


def shift_modes(f: SpectralField, c: tuple[int, int], K_out: int) -> np.ndarray:
    """Coefficient array of e^{i c.x} f embedded in a (2K_out+1)^2 array.

    Helper for multiplying by cos(c.x) exactly: the product is
    (shift by +c + shift by -c)/2.
    """
    K = f.max_freq
    out = np.zeros((2 * K_out + 1, 2 * K_out + 1), dtype=np.complex128)
    c1, c2 = c
    if abs(c1) + K > K_out or abs(c2) + K > K_out:
        raise ValueError("target array too small for shifted support")
    out[K_out + c1 - K:K_out + c1 + K + 1, K_out + c2 - K:K_out + c2 + K + 1] = f.coeffs
    return out


def modulate_cos(f: SpectralField, c: tuple[int, int], K_out: int | None = None) -> SpectralField:
    """Exact product f(x) cos(c.x) via two coefficient shifts."""
    K = f.max_freq
    radius = math.hypot(*c) + f.support_radius
    if K_out is None:
        K_out = max(abs(c[0]), abs(c[1])) + K
    out = 0.5 * (shift_modes(f, (c[0], c[1]), K_out) + shift_modes(f, (-c[0], -c[1]), K_out))
    return _trusted(out, radius)
