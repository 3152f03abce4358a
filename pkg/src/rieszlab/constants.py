"""Closed-form sharp constants and (pluri)subharmonic minorant functions.

Every constant is expressed through pbar = max{p, p/(p-1)} in a
cancellation-safe form: 1 - |cos(pi/p)| is 2 sin^2(pi/(2 pbar)) exactly, so
the A constant is evaluated as 1/(sqrt(2) sin(pi/(2 pbar))) rather than by
subtracting nearly-equal quantities.

Angle-minorant zoo (theta arguments accepted on [-2 pi, 2 pi], and reduced by
the even 2 pi-periodic extension, since the minorants are composed with sums
of principal arguments):

* re_branch_power: Re(zeta^{p/2}) with the branch that keeps the power
  continuous across the negative real axis, subharmonic for 1 < p <= 2;
* theta_lower(theta, p): the angular factor of the lower-bound minorant for
  p > 2 (cosine form for 2 < p <= 4, reflected two-band construction above);
* theta_upper(theta, p): the angular factor of the upper-bound minorant for
  p > 2 (three cosine bands on [0, 2 pi], even);
* minorant_F / minorant_G: the two-variable plurisubharmonic minorants built
  from these profiles, vanishing when either argument is zero and positively
  homogeneous of degree p/2 in |z w|.
"""

from __future__ import annotations

import math
from enum import Enum

import numpy as np

__all__ = [
    "SharpConstant",
    "Minorant",
    "conjugate_exponent_bar",
    "sharp_constant",
    "constant_range",
    "re_branch_power",
    "re_branch_angle",
    "theta_lower",
    "theta_lower_reflected",
    "theta_upper",
    "psi_angle",
    "psi_value",
    "minorant_F",
    "minorant_G",
    "minorant_value",
    "minorant_range",
]

TWO_PI = 2.0 * math.pi


def conjugate_exponent_bar(p: float) -> float:
    """pbar = max{p, p/(p-1)} for p > 1."""
    p = float(p)
    if p <= 1.0:
        raise ValueError(f"p must be > 1, got {p}")
    return max(p, p / (p - 1.0))


class SharpConstant(Enum):
    """Catalog of the closed-form sharp constants."""

    A = "A"                        # mixed norm <= A * Hardy norm
    B = "B"                        # Hardy norm <= B * mixed norm
    HILBERT_NORM = "HILBERT_NORM"  # cot(pi/(2 pbar)), norm of the conjugation operator
    PICHORIDES = "PICHORIDES"      # cot(pi/(2 pbar)), conjugate-of-real-part constant
    VERBITSKY_CSC = "VERBITSKY_CSC"  # csc(pi/(2 pbar)), analytic vs real part
    VERBITSKY_SEC = "VERBITSKY_SEC"  # sec(pi/(2 pbar)), analytic vs imaginary part
    A_LOW_P = "A_LOW_P"            # (1 + cos(pi/p))^{-p/2}, 1 < p <= 2
    B_LOW_P = "B_LOW_P"            # 2^{p/2} tan(pi/(2p)), 1 < p <= 2
    A_HIGH_P = "A_HIGH_P"          # (1 - cos(pi/p))^{-p/2}, p > 2
    B_HIGH_P = "B_HIGH_P"          # 2^{p/2} cot(pi/(2p)), p > 2
    C_HIGH_P = "C_HIGH_P"          # (sqrt(2) cos(pi/(2p)))^p, p > 2
    D_HIGH_P = "D_HIGH_P"          # 2^p cos^{p-1}(pi/(2p)) sin(pi/(2p)), p > 2
    C_LOW_P = "C_LOW_P"            # (sqrt(2) sin(pi/(2p)))^p, 1 < p < 2
    D_LOW_P = "D_LOW_P"            # 2^p sin^{p-1}(pi/(2p)) cos(pi/(2p)), 1 < p < 2
    VERBITSKY_A = "VERBITSKY_A"    # sec^p(pi/(2p)), 1 < p <= 2
    VERBITSKY_B = "VERBITSKY_B"    # tan(pi/(2p)), 1 < p <= 2
    ISOP = "ISOP"                  # (1/2) csc(pi/(4n)), integer n >= 2

_P_RANGES: dict[SharpConstant, tuple[float, float, bool, bool]] = {
    # (lo, hi, lo_open, hi_open) in p; ISOP is integer-n and handled separately
    SharpConstant.A: (1.0, math.inf, True, True),
    SharpConstant.B: (1.0, math.inf, True, True),
    SharpConstant.HILBERT_NORM: (1.0, math.inf, True, True),
    SharpConstant.PICHORIDES: (1.0, math.inf, True, True),
    SharpConstant.VERBITSKY_CSC: (1.0, math.inf, True, True),
    SharpConstant.VERBITSKY_SEC: (1.0, math.inf, True, True),
    SharpConstant.A_LOW_P: (1.0, 2.0, True, False),
    SharpConstant.B_LOW_P: (1.0, 2.0, True, False),
    SharpConstant.A_HIGH_P: (2.0, math.inf, True, True),
    SharpConstant.B_HIGH_P: (2.0, math.inf, True, True),
    SharpConstant.C_HIGH_P: (2.0, math.inf, True, True),
    SharpConstant.D_HIGH_P: (2.0, math.inf, True, True),
    SharpConstant.C_LOW_P: (1.0, 2.0, True, True),
    SharpConstant.D_LOW_P: (1.0, 2.0, True, True),
    SharpConstant.VERBITSKY_A: (1.0, 2.0, True, False),
    SharpConstant.VERBITSKY_B: (1.0, 2.0, True, False),
}


def constant_range(kind: SharpConstant) -> tuple[float, float, bool, bool]:
    """Validity range of a p-indexed constant; ISOP is indexed by integer n >= 2."""
    if kind is SharpConstant.ISOP:
        raise ValueError("ISOP is indexed by integer n >= 2, not by p")
    return _P_RANGES[kind]


def _check_p(kind: SharpConstant, p: float) -> float:
    lo, hi, lo_open, hi_open = _P_RANGES[kind]
    ok_lo = p > lo if lo_open else p >= lo
    ok_hi = p < hi if hi_open else p <= hi
    if not (ok_lo and ok_hi and math.isfinite(p)):
        raise ValueError(f"{kind.value} is defined for p in "
                         f"{'(' if lo_open else '['}{lo}, {hi}{')' if hi_open else ']'}, got {p}")
    return float(p)


def sharp_constant(kind: SharpConstant, p: float | None = None, n: int | None = None) -> float:
    """Evaluate a named constant at exponent p (or order n for ISOP)."""
    kind = SharpConstant(kind)
    if kind is SharpConstant.ISOP:
        if n is None or n != int(n) or int(n) < 2:
            raise ValueError(f"ISOP requires an integer n >= 2, got {n}")
        return 0.5 / math.sin(math.pi / (4.0 * int(n)))
    if p is None:
        raise ValueError(f"{kind.value} requires an exponent p")
    p = _check_p(kind, float(p))
    half = math.pi / (2.0 * p)
    if kind is SharpConstant.A:
        return 1.0 / (math.sqrt(2.0) * math.sin(math.pi / (2.0 * conjugate_exponent_bar(p))))
    if kind is SharpConstant.B:
        return math.sqrt(2.0) * math.cos(math.pi / (2.0 * conjugate_exponent_bar(p)))
    if kind in (SharpConstant.HILBERT_NORM, SharpConstant.PICHORIDES):
        x = math.pi / (2.0 * conjugate_exponent_bar(p))
        return math.cos(x) / math.sin(x)
    if kind is SharpConstant.VERBITSKY_CSC:
        return 1.0 / math.sin(math.pi / (2.0 * conjugate_exponent_bar(p)))
    if kind is SharpConstant.VERBITSKY_SEC:
        return 1.0 / math.cos(math.pi / (2.0 * conjugate_exponent_bar(p)))
    if kind is SharpConstant.A_LOW_P:
        # (1 + cos(pi/p))^{-p/2} = (2 cos^2(pi/(2p)))^{-p/2}
        return (2.0 * math.cos(half) ** 2) ** (-0.5 * p)
    if kind is SharpConstant.B_LOW_P:
        return 2.0 ** (0.5 * p) * math.tan(half)
    if kind is SharpConstant.A_HIGH_P:
        # (1 - cos(pi/p))^{-p/2} = (2 sin^2(pi/(2p)))^{-p/2}
        return (2.0 * math.sin(half) ** 2) ** (-0.5 * p)
    if kind is SharpConstant.B_HIGH_P:
        return 2.0 ** (0.5 * p) / math.tan(half)
    if kind is SharpConstant.C_HIGH_P:
        return (math.sqrt(2.0) * math.cos(half)) ** p
    if kind is SharpConstant.D_HIGH_P:
        # tangent to 2^p cos^p(t/2) at t = pi/p; the 2^p factor restores the
        # scaling of the unscaled |sin s|^p bound
        return 2.0**p * math.cos(half) ** (p - 1.0) * math.sin(half)
    if kind is SharpConstant.C_LOW_P:
        return (math.sqrt(2.0) * math.sin(half)) ** p
    if kind is SharpConstant.D_LOW_P:
        # (2 - 2 cos(pi/p))^{p/2} cot(pi/(2p)) = 2^p sin^{p-1}(pi/(2p)) cos(pi/(2p))
        return 2.0**p * math.sin(half) ** (p - 1.0) * math.cos(half)
    if kind is SharpConstant.VERBITSKY_A:
        return math.cos(half) ** (-p)
    if kind is SharpConstant.VERBITSKY_B:
        return math.tan(half)
    raise AssertionError(f"unhandled constant {kind}")


# ------------------------------ angle profiles ------------------------------


def _fold_pi(theta: np.ndarray) -> np.ndarray:
    """Reduce by the even 2 pi-periodic extension onto [0, pi]."""
    m = np.mod(np.abs(theta), TWO_PI)
    return np.where(m > math.pi, TWO_PI - m, m)


def re_branch_angle(theta, p: float):
    """Angular factor of Re(zeta^{p/2}) for theta in [-2 pi, 2 pi].

    cos(p theta/2) on |theta| <= pi, cos(p theta/2 -+ p pi) on the outer
    bands; the three formulas assemble the even 2 pi-periodic profile, and the
    seams at |theta| = pi are continuous because cosine is even.
    """
    theta = np.asarray(theta, dtype=float)
    out = np.where(
        np.abs(theta) <= math.pi,
        np.cos(0.5 * p * theta),
        np.where(
            theta > math.pi,
            np.cos(0.5 * p * theta - p * math.pi),
            np.cos(0.5 * p * theta + p * math.pi),
        ),
    )
    return out if out.shape else float(out)


def re_branch_power(zeta, p: float):
    """Re(zeta^{p/2}) with the continuous branch; subharmonic for 1 < p <= 2.

    Returns 0 at zeta = 0.  Accepts scalars or arrays.
    """
    if not 1.0 < p <= 2.0:
        raise ValueError(f"re_branch_power requires 1 < p <= 2, got {p}")
    zeta = np.asarray(zeta, dtype=complex)
    rho = np.abs(zeta)
    out = rho ** (0.5 * p) * re_branch_angle(np.angle(zeta), p)
    return out if out.shape else float(out)


def _phi_reflected(x: np.ndarray, p: float) -> np.ndarray:
    """Two-band profile on [0, pi/2] for p >= 4.

    -cos((p/2)(pi/2 - x)) on [pi/2 - 2 pi/p, pi/2]; the maximum of the two
    reflected cosine moduli below that band.
    """
    knee = 0.5 * math.pi - TWO_PI / p
    outer = -np.cos(0.5 * p * (0.5 * math.pi - x))
    inner = np.maximum(
        np.abs(np.cos(0.5 * p * (0.5 * math.pi - x))),
        np.abs(np.cos(0.5 * p * (0.5 * math.pi + x))),
    )
    return np.where(x >= knee, outer, inner)


def theta_lower_reflected(theta, p: float):
    """Reflected-construction angular minorant, valid for p >= 4.

    Even, symmetric about pi/2, hence pi-periodic; used with the -pi/2 angle
    shift in the p >= 4 lower bound and in the PHI_HIGH minorant.
    """
    if p < 4.0:
        raise ValueError(f"the reflected construction requires p >= 4, got {p}")
    theta = np.asarray(theta, dtype=float)
    m = _fold_pi(theta)
    m = np.minimum(m, math.pi - m)  # symmetry about pi/2
    out = _phi_reflected(m, p)
    return out if out.shape else float(out)


def theta_lower(theta, p: float):
    """Angular minorant for the p > 2 lower bound.

    -cos((p/2)(pi - |theta|)) for 2 < p <= 4; the reflected construction for
    p > 4.  Extended evenly and 2 pi-periodically: the even 2 pi-periodic
    extension is what composing with principal arguments requires, and for
    p > 4 it coincides with reflecting about pi (the profile is symmetric
    about pi/2), while for 2 < p <= 4 a pi-shift extension would break the
    lower bound beyond |theta| = pi.
    """
    if p <= 2.0:
        raise ValueError(f"theta_lower requires p > 2, got {p}")
    theta = np.asarray(theta, dtype=float)
    if p > 4.0:
        return theta_lower_reflected(theta, p)
    m = _fold_pi(theta)
    out = -np.cos(0.5 * p * (math.pi - m))
    return out if out.shape else float(out)


def theta_upper(theta, p: float):
    """Angular minorant for the p > 2 upper bound: even extension of the
    three-band profile on [0, 2 pi].

    -cos(p theta/2) on [0, 2 pi/p]; the mirrored cosine on
    [2 pi - 2 pi/p, 2 pi]; the max of the two cosine moduli between.
    """
    if p <= 2.0:
        raise ValueError(f"theta_upper requires p > 2, got {p}")
    theta = np.asarray(theta, dtype=float)
    m = np.mod(np.abs(theta), TWO_PI)
    band = TWO_PI / p
    lo = -np.cos(0.5 * p * m)
    hi = -np.cos(0.5 * p * (TWO_PI - m))
    mid = np.maximum(np.abs(np.cos(0.5 * p * m)), np.abs(np.cos(0.5 * p * (TWO_PI - m))))
    out = np.where(m <= band, lo, np.where(m >= TWO_PI - band, hi, mid))
    return out if out.shape else float(out)


def psi_angle(theta, p: float):
    """Angular factor of the upper-bound minorant: cos((p/2)(pi - |theta|))
    for p < 2, theta_upper for p > 2.  Undefined at p = 2."""
    if p == 2.0:
        raise ValueError("the upper-bound minorant profile is undefined at p = 2")
    theta = np.asarray(theta, dtype=float)
    if p > 2.0:
        return theta_upper(theta, p)
    m = _fold_pi(theta)
    out = np.cos(0.5 * p * (math.pi - m))
    return out if out.shape else float(out)


# --------------------------- composite minorants ---------------------------


def _phi_single(zeta, p: float):
    """The single-variable lower-bound minorant Phi_p(zeta) for p > 2.

    -|zeta|^{p/2} cos((p/2)(pi - |arg zeta|)) for 2 < p <= 4;
    |zeta|^{p/2} * reflected profile at (arg zeta - pi/2) for p > 4.
    The two forms agree at p = 4.
    """
    zeta = np.asarray(zeta, dtype=complex)
    rho = np.abs(zeta) ** (0.5 * p)
    ang = np.angle(zeta)
    if p <= 4.0:
        return rho * -np.cos(0.5 * p * (math.pi - np.abs(ang)))
    return rho * theta_lower_reflected(ang - 0.5 * math.pi, p)


def psi_value(zeta, p: float):
    """Psi_p(zeta) = |zeta|^{p/2} * psi_angle(arg zeta); subharmonic, p != 2."""
    if p == 2.0:
        raise ValueError("Psi is undefined at p = 2")
    zeta = np.asarray(zeta, dtype=complex)
    out = np.abs(zeta) ** (0.5 * p) * psi_angle(np.angle(zeta), p)
    return out if out.shape else float(out)


def minorant_F(z, w, p: float):
    """Plurisubharmonic minorant of the lower bound: Re((z w)^{p/2}) for
    1 < p <= 2, Phi_p(z w) for p > 2.  Vanishes when z = 0 or w = 0."""
    if p <= 1.0:
        raise ValueError(f"p must be > 1, got {p}")
    zw = np.asarray(z, dtype=complex) * np.asarray(w, dtype=complex)
    if p <= 2.0:
        return re_branch_power(zw, p)
    out = _phi_single(zw, p)
    return out if np.asarray(out).shape else float(out)


def minorant_G(z, w, p: float):
    """Plurisubharmonic minorant of the upper bound: Psi_p(z w), p != 2."""
    if p <= 1.0:
        raise ValueError(f"p must be > 1, got {p}")
    if p == 2.0:
        raise ValueError("the upper-bound minorant is undefined at p = 2")
    zw = np.asarray(z, dtype=complex) * np.asarray(w, dtype=complex)
    return psi_value(zw, p)


class Minorant(Enum):
    """Catalog keys for the subharmonicity tests."""

    RE_BRANCH = "RE_BRANCH"      # Re(zeta^{p/2}), 1 < p <= 2
    PHI_MID = "PHI_MID"          # -|z|^{p/2} cos((p/2)(pi-|theta|)), 2 <= p <= 4
    PHI_HIGH = "PHI_HIGH"        # |z|^{p/2} * reflected profile at theta - pi/2, p >= 4
    THETA_LOWER = "THETA_LOWER"  # |z|^{p/2} theta_lower(theta), p > 2
    THETA_UPPER = "THETA_UPPER"  # |z|^{p/2} theta_upper(theta), p > 2
    PSI = "PSI"                  # Psi_p, p > 1 and p != 2
    F_PAIR = "F_PAIR"            # two-variable minorant_F, p > 1
    G_PAIR = "G_PAIR"            # two-variable minorant_G, p > 1, p != 2


# (lo, hi, lo_inclusive, excludes_two)
_MINORANT_RANGES: dict[Minorant, tuple[float, float, bool, bool]] = {
    Minorant.RE_BRANCH: (1.0, 2.0, False, False),
    Minorant.PHI_MID: (2.0, 4.0, True, False),
    Minorant.PHI_HIGH: (4.0, math.inf, True, False),
    Minorant.THETA_LOWER: (2.0, math.inf, False, False),
    Minorant.THETA_UPPER: (2.0, math.inf, False, False),
    Minorant.PSI: (1.0, math.inf, False, True),
    Minorant.F_PAIR: (1.0, math.inf, False, False),
    Minorant.G_PAIR: (1.0, math.inf, False, True),
}


def minorant_range(mid: Minorant) -> tuple[float, float, bool, bool]:
    """(lo, hi, lo_inclusive, excludes_p_equal_2) in p."""
    return _MINORANT_RANGES[Minorant(mid)]


def _check_minorant_p(mid: Minorant, p: float) -> float:
    lo, hi, lo_inc, skip_two = _MINORANT_RANGES[mid]
    ok = (p >= lo if lo_inc else p > lo) and p <= hi
    if skip_two and p == 2.0:
        ok = False
    if not ok:
        bounds = f"{'[' if lo_inc else '('}{lo}, {hi}]"
        extra = ", p != 2" if skip_two else ""
        raise ValueError(f"{mid.value} requires p in {bounds}{extra}, got {p}")
    return float(p)


def minorant_value(mid: Minorant, zeta, p: float):
    """Evaluate a single-variable minorant at complex zeta.

    F_PAIR / G_PAIR are two-variable; use minorant_F / minorant_G (or the
    complex-line restriction tests) for those.
    """
    mid = Minorant(mid)
    p = _check_minorant_p(mid, p)
    zeta = np.asarray(zeta, dtype=complex)
    rho = np.abs(zeta) ** (0.5 * p)
    ang = np.angle(zeta)
    if mid is Minorant.RE_BRANCH:
        return re_branch_power(zeta, p)
    if mid is Minorant.PHI_MID:
        out = rho * -np.cos(0.5 * p * (math.pi - np.abs(ang)))
    elif mid is Minorant.PHI_HIGH:
        out = rho * theta_lower_reflected(ang - 0.5 * math.pi, p)
    elif mid is Minorant.THETA_LOWER:
        out = rho * theta_lower(ang, p)
    elif mid is Minorant.THETA_UPPER:
        out = rho * theta_upper(ang, p)
    elif mid is Minorant.PSI:
        return psi_value(zeta, p)
    else:
        raise ValueError(f"{mid.value} is a two-variable minorant; use minorant_F/minorant_G")
    return out if out.shape else float(out)
