"""Uniform time grids, field trajectories, and one-sided time mollification.

The construction is continuous in time; the compute grid discretizes it with
dt fine enough to resolve both the finest mollification width ell_N and the
dyadic cutoff windows 2^-N (dt <= min(ell_N, 2^-N)/8).  Trajectories extend
below their start by their first value (the iteration keeps d_t f(0) = 0), so
the discrete mollifier window clamps indices at both ends.

The mollifier is the normalized bump phi(s) ~ exp(-1/(s(1-s))) on (0, 1),
scaled to width ell and sampled on the grid.  Value weights are normalized to
unit mass (constants are mollified exactly); derivative weights get an affine
correction making them exact on constants and linears, which is what keeps
the mollified-equation commutator at the O(dt^2) level.
"""

from __future__ import annotations

import dataclasses
import functools
import math

import numpy as np

from .spectral import SpectralField, _trusted


@dataclasses.dataclass(frozen=True)
class TimeGrid:
    """Uniform grid t_i = t0 + i dt, i = 0..count-1."""

    dt: float
    count: int
    t0: float = 0.0

    def __post_init__(self):
        if self.dt <= 0 or self.count < 1:
            raise ValueError("need dt > 0 and count >= 1")

    @property
    def horizon(self) -> float:
        return self.t0 + (self.count - 1) * self.dt

    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.count)

    def time(self, i: int) -> float:
        return self.t0 + i * self.dt

    def index_of(self, t: float) -> int:
        i = round((t - self.t0) / self.dt)
        if not (0 <= i < self.count) or abs(self.time(i) - t) > 1e-9 * max(1.0, abs(t)):
            raise ValueError(f"t={t} is not a node of this grid")
        return i

    def check_resolves(self, ell_min: float, n_max: int, factor: float = 8.0):
        bound = min(ell_min, 2.0 ** (-n_max)) / factor
        if self.dt > bound * (1 + 1e-12):
            raise ValueError(
                f"dt={self.dt} does not resolve mollification/cutoff scales "
                f"(needs dt <= {bound})")


class Trajectory:
    """Time-indexed fields on a uniform grid; repeated nodes share objects.

    Fields are immutable, so constant spans are stored as repeated references;
    distinct(), the count of distinct objects, is the real memory footprint.
    """

    def __init__(self, grid: TimeGrid, fields: list[SpectralField],
                 support_radius: float | None = None):
        if len(fields) != grid.count:
            raise ValueError(f"{len(fields)} fields for {grid.count} nodes")
        self.grid = grid
        self.fields = list(fields)
        if support_radius is None:
            support_radius = max((f.support_radius for f in fields), default=0.0)
        self.support_radius = float(support_radius)

    def __len__(self):
        return len(self.fields)

    def at(self, i: int) -> SpectralField:
        return self.fields[max(0, min(i, len(self.fields) - 1))]

    def at_time(self, t: float) -> SpectralField:
        return self.fields[self.grid.index_of(t)]

    def distinct(self) -> int:
        return len({id(f) for f in self.fields})

    def is_constant(self) -> bool:
        return self.distinct() <= 1

    @classmethod
    def constant(cls, grid: TimeGrid, field: SpectralField) -> "Trajectory":
        return cls(grid, [field] * grid.count, field.support_radius)

    def map_nodes(self, fn) -> "Trajectory":
        """Apply fn to each distinct field once; shared nodes stay shared."""
        cache: dict[int, SpectralField] = {}
        out = []
        for f in self.fields:
            key = id(f)
            if key not in cache:
                cache[key] = fn(f)
            out.append(cache[key])
        return Trajectory(self.grid, out)


# -- mollifier -------------------------------------------------------------------


def bump(s: np.ndarray) -> np.ndarray:
    """Unnormalized C-infinity bump supported on (0, 1)."""
    s = np.asarray(s, dtype=np.float64)
    inside = (s > 0.0) & (s < 1.0)
    out = np.zeros_like(s)
    ss = np.where(inside, s * (1.0 - s), 1.0)
    out[inside] = np.exp(-1.0 / ss[inside])
    return out


def bump_derivative(s: np.ndarray) -> np.ndarray:
    """d/ds of the unnormalized bump (analytic)."""
    s = np.asarray(s, dtype=np.float64)
    inside = (s > 0.0) & (s < 1.0)
    out = np.zeros_like(s)
    si = s[inside]
    u = si * (1.0 - si)
    out[inside] = np.exp(-1.0 / u) * (1.0 - 2.0 * si) / (u * u)
    return out


@functools.lru_cache(maxsize=128)
def mollifier_weights(ell: float, dt: float) -> tuple[np.ndarray, np.ndarray]:
    """(value weights, derivative weights) for lag offsets m = 0..M.

    f_ell(t_i) = sum_m w[m] f(t_{i-m}); (d/dt f_ell)(t_i) = sum_m v[m] f(t_{i-m}).
    w sums to exactly 1; v is affine-corrected so sum v = 0 and
    sum v * (m dt) = -1 (exact derivative on linear trajectories).
    """
    M = int(round(ell / dt))
    if M < 4:
        raise ValueError(f"dt={dt} does not resolve mollifier width ell={ell}")
    s = np.arange(M + 1) * dt / ell
    w = bump(s) * dt / ell
    norm = w.sum()
    # bump integral quadrature ~1; record raw mass before normalizing
    w = w / norm
    v = bump_derivative(s) * dt / (ell * ell)
    lag = np.arange(M + 1) * dt
    # affine correction: sum v = 0, sum v*lag = -1
    A = np.array([[M + 1.0, lag.sum()], [lag.sum(), (lag * lag).sum()]])
    rhs = np.array([-v.sum(), -1.0 - (v * lag).sum()])
    ab = np.linalg.solve(A, rhs)
    v = v + ab[0] + ab[1] * lag
    w.flags.writeable = False
    v.flags.writeable = False
    return w, v


def discrete_mollifier_mass(ell: float, dt: float) -> float:
    """Raw quadrature mass of the sampled bump before normalization."""
    M = int(round(ell / dt))
    s = np.arange(M + 1) * dt / ell
    total = bump(np.linspace(0, 1, 20001))
    exact = np.trapezoid(total, dx=1.0 / 20000.0)
    return float(bump(s).sum() * dt / ell / exact)


def _window_values(fields: list, i: int, M: int):
    return [fields[max(0, min(i - m, len(fields) - 1))] for m in range(M + 1)]


def convolve_window(window: list[SpectralField], weights: np.ndarray) -> SpectralField:
    """sum_m weights[m] window[m]; identical-object windows short-circuit.

    The short-circuit keeps plateau values exact (bitwise), which is what
    makes boundary-data preservation exact at every level.
    """
    first = window[0]
    if all(f is first for f in window[1:]) and abs(weights.sum() - 1.0) < 1e-9:
        return first
    K = max(f.max_freq for f in window)
    acc = np.zeros((2 * K + 1, 2 * K + 1), dtype=np.complex128)
    for wm, f in zip(weights, window):
        if wm == 0.0:
            continue
        if f.max_freq != K:
            f = f.with_max_freq(K)
        acc += wm * f.coeffs
    return _trusted(acc, max(f.support_radius for f in window))


def mollify_time(tr: Trajectory, ell: float) -> tuple[Trajectory, Trajectory]:
    """One-sided time mollification of a trajectory and its time derivative.

    Returns (tr * phi_ell, tr * phi'_ell) on the same grid, extending below
    the start by the first value.  Constant trajectories come back unchanged
    with an exactly-zero derivative.
    """
    dt = tr.grid.dt
    w, v = mollifier_weights(ell, dt)
    M = len(w) - 1
    out_f, out_d = [], []
    zero = None
    cache: dict[tuple, SpectralField] = {}
    dcache: dict[tuple, SpectralField] = {}
    for i in range(len(tr)):
        window = _window_values(tr.fields, i, M)
        key = tuple(id(f) for f in window)
        if key not in cache:
            cache[key] = convolve_window(window, w)
            first = window[0]
            if all(f is first for f in window[1:]):
                if zero is None:
                    zero = first.zero_like()
                dcache[key] = zero
            else:
                dcache[key] = convolve_window(window, v)
        out_f.append(cache[key])
        out_d.append(dcache[key])
    return Trajectory(tr.grid, out_f), Trajectory(tr.grid, out_d)


# -- finite differences -----------------------------------------------------------


def d4_weights(dt: float) -> np.ndarray:
    """4th order centered first-derivative stencil over offsets -2..+2."""
    return np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / (12.0 * dt)


def d4_at(fields: list[SpectralField], i: int, dt: float) -> SpectralField:
    """Centered 4th-order d/dt with index clamping at both ends."""
    idx = [max(0, min(i + o, len(fields) - 1)) for o in (-2, -1, 0, 1, 2)]
    w = d4_weights(dt)
    window = [fields[j] for j in idx]
    first = window[0]
    if all(f is first for f in window[1:]):
        return first.zero_like()
    K = max(f.max_freq for f in window)
    acc = np.zeros((2 * K + 1, 2 * K + 1), dtype=np.complex128)
    for wm, f in zip(w, window):
        if wm == 0.0:
            continue
        acc += f.with_max_freq(K).coeffs * wm
    return _trusted(acc, max(f.support_radius for f in window))
