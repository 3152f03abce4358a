"""Holomorphic polynomials, harmonic mappings f = g + conj(h), and boundary data.

A harmonic mapping on the unit disk is represented by a pair of finite Taylor
polynomials (g, h) with f(z) = g(z) + conj(h(z)).  Boundary traces live on the
unit circle as bilateral Fourier series: the g-coefficients occupy the
nonnegative frequencies and the conjugated h-coefficients the negative ones,
with k = 0 receiving g_0 + conj(h_0).

The Calderon extremal family g(z) = ((1+z)/(1-z))^(2*gamma/pi) (principal
branch, |arg (1+z)/(1-z)| <= pi/2) is the sharpness witness for the conjugate
function constants; on the boundary (1+e^{it})/(1-e^{it}) = i*cot(t/2), so the
trace has constant argument +/- gamma and modulus |cot(t/2)|^(2*gamma/pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

import numpy as np

__all__ = [
    "TaylorPoly",
    "HarmonicMap",
    "FourierSeries",
    "CalderonFamily",
    "Constraint",
    "eval_harmonic",
    "boundary_series",
    "series_to_map",
    "random_harmonic",
    "random_poly",
    "calderon_boundary",
    "calderon_taylor",
    "map_to_dict",
    "map_from_dict",
]


def _as_complex_tuple(coeffs: Iterable[complex]) -> tuple[complex, ...]:
    out = tuple(complex(c) for c in coeffs)
    return out if out else (0j,)


@dataclass(frozen=True)
class TaylorPoly:
    """Finite ascending Taylor coefficients a_0..a_N of a holomorphic polynomial."""

    coeffs: tuple[complex, ...]

    def __init__(self, coeffs: Iterable[complex]):
        object.__setattr__(self, "coeffs", _as_complex_tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def trimmed(self) -> "TaylorPoly":
        """Drop trailing zero coefficients (degree 0 is kept)."""
        n = len(self.coeffs)
        while n > 1 and self.coeffs[n - 1] == 0:
            n -= 1
        return TaylorPoly(self.coeffs[:n])

    def __call__(self, z):
        """Horner evaluation; accepts scalars or numpy arrays."""
        z = np.asarray(z, dtype=complex)
        acc = np.full(z.shape, self.coeffs[-1], dtype=complex)
        for c in self.coeffs[-2::-1]:
            acc = acc * z + c
        return acc if acc.shape else complex(acc)

    def scaled(self, c: complex) -> "TaylorPoly":
        return TaylorPoly(tuple(c * a for a in self.coeffs))

    def shifted_constant(self, c: complex) -> "TaylorPoly":
        return TaylorPoly((self.coeffs[0] + c,) + self.coeffs[1:])

    def boundary_values(self, n: int, r: float = 1.0) -> np.ndarray:
        """Values at the n uniform circle nodes r*exp(2*pi*i*j/n), via FFT.

        Requires n > degree so that no aliasing folds coefficients together.
        """
        if n <= self.degree:
            raise ValueError(f"n={n} must exceed the polynomial degree {self.degree}")
        padded = np.zeros(n, dtype=complex)
        c = np.asarray(self.coeffs, dtype=complex)
        if r != 1.0:
            c = c * (float(r) ** np.arange(len(c)))
        padded[: len(c)] = c
        # f(e^{i t_j}) = sum_k a_k e^{i k t_j} is n * ifft of the padded coefficients
        return np.fft.ifft(padded) * n


@dataclass(frozen=True)
class HarmonicMap:
    """f = g + conj(h) with holomorphic polynomial factors g, h."""

    g: TaylorPoly
    h: TaylorPoly

    @property
    def degree(self) -> int:
        return max(self.g.degree, self.h.degree)

    def normalized(self) -> "HarmonicMap":
        """Shift h(0) into g, producing h(0) = 0 without changing f."""
        h0 = self.h.coeffs[0]
        if h0 == 0:
            return self
        return HarmonicMap(
            self.g.shifted_constant(h0.conjugate()),
            self.h.shifted_constant(-h0),
        )

    def scaled(self, c: complex) -> "HarmonicMap":
        """c*f = (c*g) + conj(conj(c)*h)."""
        return HarmonicMap(self.g.scaled(c), self.h.scaled(complex(c).conjugate()))

    def boundary_values(self, n: int, r: float = 1.0) -> np.ndarray:
        return self.g.boundary_values(n, r) + np.conj(self.h.boundary_values(n, r))


def eval_harmonic(m: HarmonicMap, z):
    """f(z) = g(z) + conj(h(z)); exact polynomial evaluation, |z| <= 1 intended."""
    return m.g(z) + np.conj(m.h(z))


@dataclass(frozen=True)
class FourierSeries:
    """Bilateral Fourier coefficients {k: c_k} of a boundary trace on the circle."""

    coeffs: dict

    def __init__(self, coeffs: Mapping[int, complex]):
        object.__setattr__(
            self, "coeffs", {int(k): complex(v) for k, v in coeffs.items()}
        )

    @property
    def degree(self) -> int:
        return max((abs(k) for k in self.coeffs), default=0)

    def __call__(self, tau):
        tau = np.asarray(tau, dtype=float)
        acc = np.zeros(tau.shape, dtype=complex)
        for k, c in self.coeffs.items():
            acc = acc + c * np.exp(1j * k * tau)
        return acc if acc.shape else complex(acc)

    def mean(self) -> complex:
        return self.coeffs.get(0, 0j)


def boundary_series(m: HarmonicMap) -> FourierSeries:
    """Boundary trace coefficients: g_k at k >= 0, conj(h_k) at -k, merged at 0."""
    coeffs: dict[int, complex] = {}
    for k, c in enumerate(m.g.coeffs):
        coeffs[k] = coeffs.get(k, 0j) + c
    for k, c in enumerate(m.h.coeffs):
        coeffs[-k] = coeffs.get(-k, 0j) + c.conjugate()
    return FourierSeries(coeffs)


def series_to_map(series: FourierSeries) -> HarmonicMap:
    """Inverse of boundary_series under the h(0) = 0 convention."""
    n = series.degree
    g = [series.coeffs.get(k, 0j) for k in range(n + 1)]
    h = [0j] + [series.coeffs.get(-k, 0j).conjugate() for k in range(1, n + 1)]
    return HarmonicMap(TaylorPoly(g), TaylorPoly(h))


class Constraint(Enum):
    """Constraint imposed on g(0)*h(0) when sampling random maps."""

    NONE = "NONE"
    RE_ZERO = "RE_ZERO"
    RE_NONNEG = "RE_NONNEG"
    RE_NONPOS = "RE_NONPOS"


def _disk_samples(rng: np.random.Generator, n: int) -> np.ndarray:
    """n i.i.d. points uniform on the closed unit disk."""
    radius = np.sqrt(rng.uniform(0.0, 1.0, n))
    angle = rng.uniform(0.0, 2.0 * math.pi, n)
    return radius * np.exp(1j * angle)


def random_poly(degree: int, seed: int) -> TaylorPoly:
    """Polynomial with coefficients i.i.d. uniform on the unit disk."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    rng = np.random.default_rng(seed)
    return TaylorPoly(_disk_samples(rng, degree + 1))


def random_harmonic(
    degree: int, seed: int, constraint: Constraint = Constraint.NONE
) -> HarmonicMap:
    """Random map with the requested sign constraint on Re(g(0)h(0)).

    Deterministic for a fixed seed.  RE_ZERO is enforced constructively by
    h(0) = i*s*conj(g(0)), so g(0)h(0) = i*s*|g(0)|^2 is purely imaginary;
    s is a random signed power of two, which makes the cancellation in
    Re(g(0)h(0)) = a*(s*b) - b*(s*a) exact in floating point, not just up to
    roundoff.  The one-sided constraints flip the sign of h(0) when it lands
    on the wrong side (no rejection, so measure-zero sets cannot stall).
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    constraint = Constraint(constraint)
    rng = np.random.default_rng(seed)
    g = _disk_samples(rng, degree + 1)
    h = _disk_samples(rng, degree + 1)
    if constraint is Constraint.RE_ZERO:
        s = float(rng.choice([-1.0, 1.0])) * 2.0 ** -float(rng.integers(0, 5))
        a, b = g[0].real, g[0].imag
        h[0] = complex(s * b, s * a)  # = i * s * conj(g[0])
    elif constraint is not Constraint.NONE:
        re = (g[0] * h[0]).real
        want_nonneg = constraint is Constraint.RE_NONNEG
        if (re < 0) == want_nonneg:
            h[0] = -h[0]
    return HarmonicMap(TaylorPoly(g), TaylorPoly(h))


@dataclass(frozen=True)
class CalderonFamily:
    """Extremal family parameters: angle gamma in (0, pi/(2p)), exponent p > 1.

    The strict upper bound gamma < pi/(2p) is what keeps the boundary trace
    p-integrable (the trace grows like |t|^(-2*gamma/pi) near t = 0).
    """

    gamma: float
    p: float

    def __post_init__(self):
        if not self.p > 1.0:
            raise ValueError(f"p must be > 1, got {self.p}")
        if not 0.0 < self.gamma < math.pi / (2.0 * self.p):
            raise ValueError(
                f"gamma must lie in (0, pi/(2p)) = (0, {math.pi / (2 * self.p):.6g}), "
                f"got {self.gamma}"
            )

    @property
    def modulus_exponent(self) -> float:
        """a = 2*gamma*p/pi, the growth exponent of |g|^p at t = 0; a < 1."""
        return 2.0 * self.gamma * self.p / math.pi


def calderon_boundary(params: CalderonFamily, t):
    """Boundary values g(e^{it}) = |cot(t/2)|^(2*gamma/pi) * exp(+/- i*gamma).

    The sign of the argument follows sign(cot(t/2)).  Undefined at t = 0
    (mod 2*pi) where the trace blows up.
    """
    t = np.asarray(t, dtype=float)
    if np.any(np.isclose(np.mod(t, 2.0 * math.pi), 0.0, atol=1e-15)):
        raise ValueError("calderon_boundary is singular at t = 0 (mod 2*pi)")
    c = 2.0 * params.gamma / math.pi
    cot = 1.0 / np.tan(t / 2.0)
    val = np.abs(cot) ** c * np.exp(1j * params.gamma * np.sign(cot))
    return val if val.shape else complex(val)


def calderon_taylor(gamma: float, degree: int) -> TaylorPoly:
    """Taylor truncation of ((1+z)/(1-z))^(2*gamma/pi).

    From g'/g = 2c/(1-z^2) with c = 2*gamma/pi the coefficients satisfy
    (k+1) a_{k+1} = (k-1) a_{k-1} + 2c a_k, a_0 = 1, a_1 = 2c.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    c = 2.0 * gamma / math.pi
    a = np.zeros(degree + 1)
    a[0] = 1.0
    if degree >= 1:
        a[1] = 2.0 * c
    for k in range(1, degree):
        a[k + 1] = ((k - 1) * a[k - 1] + 2.0 * c * a[k]) / (k + 1)
    return TaylorPoly(a)


def map_to_dict(m: HarmonicMap) -> dict:
    """JSON form {"g": [[re,im],...], "h": [[re,im],...]}, ascending coefficients."""
    return {
        "g": [[c.real, c.imag] for c in m.g.coeffs],
        "h": [[c.real, c.imag] for c in m.h.coeffs],
    }


def map_from_dict(data: dict) -> HarmonicMap:
    """Parse the JSON form; raises ValueError naming the offending field."""
    if not isinstance(data, dict):
        raise ValueError("harmonic map JSON must be an object with keys 'g' and 'h'")
    polys = {}
    for key in ("g", "h"):
        if key not in data:
            raise ValueError(f"harmonic map JSON is missing the '{key}' field")
        raw = data[key]
        if not isinstance(raw, list) or not raw:
            raise ValueError(f"field '{key}' must be a nonempty list of [re, im] pairs")
        coeffs = []
        for i, pair in enumerate(raw):
            if (
                not isinstance(pair, (list, tuple))
                or len(pair) != 2
                or not all(isinstance(x, (int, float)) for x in pair)
            ):
                raise ValueError(f"field '{key}' entry {i} is not a [re, im] pair")
            coeffs.append(complex(pair[0], pair[1]))
        polys[key] = TaylorPoly(coeffs)
    return HarmonicMap(polys["g"], polys["h"])
