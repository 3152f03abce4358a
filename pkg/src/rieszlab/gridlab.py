"""Brute-force grid verification of the pointwise scalar inequalities,
sub-mean-value subharmonicity testing, and equality-locus location.

Every inequality is wired to a slack function (RHS minus LHS) whose
nonnegativity is the claim.  Two-variable inequalities in (z, w) are scanned
in reduced coordinates (r, t) = (|z|/|w|, arg z + arg w): every slack depends
only on the moduli and the angle sum and is homogeneous of degree p, so
|w| = 1, r in (0, 1] loses nothing (a direct 4-parameter random scan is kept
as a test of this reduction, see unreduced_slack).

For the homogeneous two-variable tags the slack is reported relative to the
sum of the absolute values of its three terms: raw terms reach ~1e19 at
p = 64, where an absolute -1e-9 acceptance would be swamped by roundoff,
while the relative slack keeps the tolerance meaningful at every p.  The
scalar tags are O(1) quantities and stay absolute.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

import numpy as np
from scipy import integrate

from .constants import (
    Minorant,
    SharpConstant as SC,
    _fold_pi,
    minorant_F,
    minorant_G,
    minorant_value,
    psi_angle,
    re_branch_angle,
    sharp_constant,
    theta_lower_reflected,
    theta_upper,
)
from .reporting import GridSpec, VerificationReport

__all__ = [
    "InequalityId",
    "inequality_range",
    "default_p_values",
    "equality_loci",
    "stated_equality_loci",
    "verify_pointwise",
    "locate_equality",
    "unreduced_slack",
    "check_submean",
    "check_pluri_lines",
    "origin_circle_mean",
]

TWO_PI = 2.0 * math.pi
_MAX_VIOLATIONS = 100


class InequalityId(Enum):
    """Catalog of the grid-verifiable scalar inequalities."""

    MIXED_BY_SUM_LOW = "MIXED_BY_SUM_LOW"        # (|z|^2+|w|^2)^{p/2} <= a|z+w~|^p - b*F, 1<p<=2
    MIXED_BY_SUM_RADIAL = "MIXED_BY_SUM_RADIAL"  # its single-radius reduction G(r,t) >= 0, 1<p<2
    MIXED_BY_SUM_MID = "MIXED_BY_SUM_MID"        # theta minorant form, 2<=p<=4
    MIXED_BY_SUM_HIGH = "MIXED_BY_SUM_HIGH"      # shifted reflected form, p>=4
    SUM_BY_MIXED_HIGH = "SUM_BY_MIXED_HIGH"      # |z+w~|^p <= c(...)^{p/2} - d*Psi, p>2
    SUM_BY_MIXED_RADIAL = "SUM_BY_MIXED_RADIAL"  # its normalized single-radius form, p>2
    SUM_BY_MIXED_LOW = "SUM_BY_MIXED_LOW"        # cosine minorant form, 1<p<2
    VERBITSKY_COS = "VERBITSKY_COS"              # A cos^p x - B cos(px) >= 1, 1<p<=2
    CSC_GAP = "CSC_GAP"                          # 1 + 1/x^2 - csc^2 x >= 0 on (0, pi/4]
    COT_GAP = "COT_GAP"                          # cot x - (1/x - x/2) >= 0 on (0, pi/4]
    FACTOR_X = "FACTOR_X"                        # sin^{p/2}(pi/p) cot^{1-p/2}(pi/2p) <= 1, 1<p<2
    FACTOR_Y = "FACTOR_Y"                        # stationary-point factor Y >= 1, 1<p<2
    ROOT_GAP_COS = "ROOT_GAP_COS"                # 1-(1-cos(pi/p))^{p/(p-2)} <= cos(pi/2p), p>=4
    ROOT_GAP_SIN = "ROOT_GAP_SIN"                # cos((p/2) arccos s) >= sin(pi/2p), p>=4
    ROOT_GAP_PRODUCT = "ROOT_GAP_PRODUCT"        # s <= cos((p/2) arccos s) cot(pi/2p), p>=4
    ROOT_GAP_ANGLE = "ROOT_GAP_ANGLE"            # cos((pi-pi/p)/p) <= s, p>=4


def _normalized(t1, t2, t3):
    """(t1 - t2 - t3) / (|t1| + |t2| + |t3|); the denominator never vanishes
    on the scanned domains (t3 > 0 whenever t1 = 0)."""
    return (t1 - t2 - t3) / (np.abs(t1) + np.abs(t2) + np.abs(t3))


def _sum_sq(r, t):
    return 1.0 + r * r + 2.0 * r * np.cos(t)


def _slack_mixed_low(p, r, t):
    a = sharp_constant(SC.A_LOW_P, p)
    b = sharp_constant(SC.B_LOW_P, p)
    t1 = a * _sum_sq(r, t) ** (0.5 * p)
    t2 = b * r ** (0.5 * p) * re_branch_angle(t, p)
    t3 = (1.0 + r * r) ** (0.5 * p)
    return _normalized(t1, t2, t3)


def _slack_mixed_radial(p, r, t):
    # literal single-radius form: same inequality with the angle restricted to
    # the principal band, stated with the tangent factor spelled out
    t1 = (_sum_sq(r, t) / (1.0 + math.cos(math.pi / p))) ** (0.5 * p)
    t2 = 2.0 ** (0.5 * p) * r ** (0.5 * p) * np.cos(0.5 * p * t) * math.tan(math.pi / (2.0 * p))
    t3 = (1.0 + r * r) ** (0.5 * p)
    return _normalized(t1, t2, t3)


def _conj_profile(t, p):
    """-cos((p/2)(pi - |t|)) with the even 2 pi-periodic extension."""
    return -np.cos(0.5 * p * (math.pi - _fold_pi(np.asarray(t, dtype=float))))


def _slack_mixed_mid(p, r, t):
    # the constants extend continuously to the p = 2 endpoint (a -> 1, b -> 2),
    # where the slack vanishes identically
    a = sharp_constant(SC.A_HIGH_P, p) if p > 2.0 else 1.0
    b = sharp_constant(SC.B_HIGH_P, p) if p > 2.0 else 2.0
    t1 = a * _sum_sq(r, t) ** (0.5 * p)
    t2 = b * r ** (0.5 * p) * _conj_profile(t, p)
    t3 = (1.0 + r * r) ** (0.5 * p)
    return _normalized(t1, t2, t3)


def _slack_mixed_high(p, r, t):
    a = sharp_constant(SC.A_HIGH_P, p)
    b = sharp_constant(SC.B_HIGH_P, p)
    t1 = a * _sum_sq(r, t) ** (0.5 * p)
    t2 = b * r ** (0.5 * p) * theta_lower_reflected(t - 0.5 * math.pi, p)
    t3 = (1.0 + r * r) ** (0.5 * p)
    return _normalized(t1, t2, t3)


def _slack_sum_by_mixed_high(p, r, t):
    c = sharp_constant(SC.C_HIGH_P, p)
    d = sharp_constant(SC.D_HIGH_P, p)
    t1 = c * (1.0 + r * r) ** (0.5 * p)
    t2 = d * r ** (0.5 * p) * theta_upper(t, p)
    t3 = _sum_sq(r, t) ** (0.5 * p)
    return _normalized(t1, t2, t3)


def _slack_sum_by_mixed_low(p, r, t):
    c = sharp_constant(SC.C_LOW_P, p)
    d = sharp_constant(SC.D_LOW_P, p)
    t1 = c * (1.0 + r * r) ** (0.5 * p)
    t2 = d * r ** (0.5 * p) * psi_angle(t, p)
    t3 = _sum_sq(r, t) ** (0.5 * p)
    return _normalized(t1, t2, t3)


def _slack_verbitsky_cos(p, x):
    a = sharp_constant(SC.VERBITSKY_A, p)
    b = sharp_constant(SC.VERBITSKY_B, p)
    cx = np.maximum(np.cos(x), 0.0)  # cos >= 0 on |x| <= pi/2; clip roundoff
    return a * cx**p - b * np.cos(p * x) - 1.0


def _slack_csc_gap(p, x):
    return 1.0 + 1.0 / (x * x) - 1.0 / np.sin(x) ** 2


def _slack_cot_gap(p, x):
    return np.cos(x) / np.sin(x) - (1.0 / x - 0.5 * x)


def _slack_factor_x(p):
    half = math.pi / (2.0 * p)
    return 1.0 - math.sin(math.pi / p) ** (0.5 * p) * (1.0 / math.tan(half)) ** (1.0 - 0.5 * p)


def _slack_factor_y(p):
    u = (math.sqrt(2.0) * math.sin(math.pi / (2.0 * p))) ** (2.0 * p / (p - 2.0))
    y = (1.0 / (1.0 - u) - 1.0) ** (0.5 * (p - 2.0))
    return y - 1.0


def _root_gap(p: float) -> float:
    """s = 1 - (1 - cos(pi/p))^{p/(p-2)} for p >= 4."""
    return 1.0 - (1.0 - math.cos(math.pi / p)) ** (p / (p - 2.0))


def _slack_root_gap_cos(p):
    return math.cos(math.pi / (2.0 * p)) - _root_gap(p)


def _slack_root_gap_sin(p):
    return math.cos(0.5 * p * math.acos(_root_gap(p))) - math.sin(math.pi / (2.0 * p))


def _slack_root_gap_product(p):
    s = _root_gap(p)
    return math.cos(0.5 * p * math.acos(s)) / math.tan(math.pi / (2.0 * p)) - s


def _slack_root_gap_angle(p):
    return _root_gap(p) - math.cos((math.pi - math.pi / p) / p)


def _pm_mod_2pi(values: Sequence[float], domain: tuple[float, float]) -> list[float]:
    """All points +/-v + 2 pi k inside the domain."""
    lo, hi = domain
    out = []
    for v in values:
        for sign in (1.0, -1.0):
            for k in (-2, -1, 0, 1, 2):
                x = sign * v + TWO_PI * k
                if lo - 1e-12 <= x <= hi + 1e-12:
                    out.append(x)
    return sorted(set(out))


@dataclass(frozen=True)
class _TagInfo:
    arity: int                    # 2: (r, t); 1: (x,); 0: scalar in p
    p_lo: float
    p_hi: float
    lo_closed: bool
    hi_closed: bool
    slack: Callable
    p_values: tuple
    r_range: tuple[float, float] | None = None
    t_range: tuple[float, float] | None = None
    loci: Callable[[float], list] | None = None        # verified equality points
    stated_loci: Callable[[float], list] | None = None  # claimed equality points


_EXT = (-TWO_PI, TWO_PI)


def _geom(lo, hi, n=8):
    return tuple(float(x) for x in np.geomspace(lo, hi, n))


def _lin(lo, hi, n=8):
    return tuple(float(x) for x in np.linspace(lo, hi, n))


_REGISTRY: dict[InequalityId, _TagInfo] = {
    InequalityId.MIXED_BY_SUM_LOW: _TagInfo(
        2, 1.0, 2.0, False, True, _slack_mixed_low, _lin(1.1, 2.0),
        r_range=(0.0, 1.0), t_range=_EXT,
        loci=lambda p: [(1.0, t) for t in _pm_mod_2pi([math.pi / p], _EXT)],
        stated_loci=lambda p: [
            (1.0, t) for v in (math.pi / p, math.pi / p + math.pi)
            for t in _pm_mod_2pi([v], _EXT)
        ],
    ),
    InequalityId.MIXED_BY_SUM_RADIAL: _TagInfo(
        2, 1.0, 2.0, False, False, _slack_mixed_radial, _lin(1.1, 1.9),
        r_range=(0.0, 1.0), t_range=(-math.pi, math.pi),
        loci=lambda p: [(1.0, math.pi / p), (1.0, -math.pi / p)],
        stated_loci=lambda p: [(1.0, math.pi / p), (1.0, -math.pi / p)],
    ),
    InequalityId.MIXED_BY_SUM_MID: _TagInfo(
        2, 2.0, 4.0, True, True, _slack_mixed_mid, _lin(2.0, 4.0),
        r_range=(0.0, 1.0), t_range=_EXT,
        loci=lambda p: [
            (1.0, t)
            for t in _pm_mod_2pi([math.pi - math.pi / p, math.pi + math.pi / p], _EXT)
        ],
        stated_loci=lambda p: [(1.0, math.pi / p), (1.0, -math.pi / p)],
    ),
    InequalityId.MIXED_BY_SUM_HIGH: _TagInfo(
        2, 4.0, 64.0, True, True, _slack_mixed_high, _geom(4.0, 64.0),
        r_range=(0.0, 1.0), t_range=_EXT,
        loci=lambda p: [
            (1.0, t)
            for t in _pm_mod_2pi([math.pi - math.pi / p, math.pi + math.pi / p], _EXT)
        ],
        stated_loci=lambda p: [
            (1.0, 0.5 * math.pi + math.pi / p),
            (1.0, -(0.5 * math.pi + math.pi / p)),
        ],
    ),
    InequalityId.SUM_BY_MIXED_HIGH: _TagInfo(
        2, 2.0, 64.0, False, True, _slack_sum_by_mixed_high, _geom(2.25, 64.0),
        r_range=(0.0, 1.0), t_range=_EXT,
        loci=lambda p: [
            (1.0, t)
            for t in _pm_mod_2pi([math.pi / p, TWO_PI - math.pi / p], _EXT)
        ],
        stated_loci=lambda p: [
            (1.0, t) for v in (math.pi / p, math.pi / p + math.pi)
            for t in _pm_mod_2pi([v], _EXT)
        ],
    ),
    InequalityId.SUM_BY_MIXED_RADIAL: _TagInfo(
        2, 2.0, 64.0, False, True, _slack_sum_by_mixed_high, _geom(2.25, 64.0),
        r_range=(0.0, 1.0), t_range=_EXT,
        loci=lambda p: [
            (1.0, t)
            for t in _pm_mod_2pi([math.pi / p, TWO_PI - math.pi / p], _EXT)
        ],
        stated_loci=lambda p: [
            (1.0, t) for v in (math.pi / p, math.pi / p + math.pi)
            for t in _pm_mod_2pi([v], _EXT)
        ],
    ),
    InequalityId.SUM_BY_MIXED_LOW: _TagInfo(
        2, 1.0, 2.0, False, False, _slack_sum_by_mixed_low, _lin(1.1, 1.9),
        r_range=(0.0, 1.0), t_range=_EXT,
        loci=lambda p: [
            (1.0, t)
            for t in _pm_mod_2pi([math.pi - math.pi / p, math.pi + math.pi / p], _EXT)
        ],
        stated_loci=lambda p: [
            (1.0, math.pi - math.pi / p),
            (1.0, -(math.pi - math.pi / p)),
        ],
    ),
    InequalityId.VERBITSKY_COS: _TagInfo(
        1, 1.0, 2.0, False, True, _slack_verbitsky_cos, _lin(1.1, 2.0),
        t_range=(-0.5 * math.pi, 0.5 * math.pi),
        loci=lambda p: [(math.pi / (2.0 * p),), (-math.pi / (2.0 * p),)],
        stated_loci=lambda p: [(math.pi / (2.0 * p),), (-math.pi / (2.0 * p),)],
    ),
    InequalityId.CSC_GAP: _TagInfo(
        1, 1.0, 64.0, False, True, _slack_csc_gap, _lin(1.5, 8.0),
        t_range=(1e-4, 0.25 * math.pi),
    ),
    InequalityId.COT_GAP: _TagInfo(
        1, 1.0, 64.0, False, True, _slack_cot_gap, _lin(1.5, 8.0),
        t_range=(1e-4, 0.25 * math.pi),
    ),
    InequalityId.FACTOR_X: _TagInfo(
        0, 1.0, 2.0, False, False, _slack_factor_x, _lin(1.05, 1.95)
    ),
    InequalityId.FACTOR_Y: _TagInfo(
        0, 1.0, 2.0, False, False, _slack_factor_y, _lin(1.05, 1.95)
    ),
    InequalityId.ROOT_GAP_COS: _TagInfo(
        0, 4.0, 64.0, True, True, _slack_root_gap_cos, _geom(4.0, 64.0)
    ),
    InequalityId.ROOT_GAP_SIN: _TagInfo(
        0, 4.0, 64.0, True, True, _slack_root_gap_sin, _geom(4.0, 64.0)
    ),
    InequalityId.ROOT_GAP_PRODUCT: _TagInfo(
        0, 4.0, 64.0, True, True, _slack_root_gap_product, _geom(4.0, 64.0)
    ),
    InequalityId.ROOT_GAP_ANGLE: _TagInfo(
        0, 4.0, 64.0, True, True, _slack_root_gap_angle, _geom(4.0, 64.0)
    ),
}


def inequality_range(tag: InequalityId) -> tuple[float, float, bool, bool]:
    info = _REGISTRY[InequalityId(tag)]
    return info.p_lo, info.p_hi, info.lo_closed, info.hi_closed


def default_p_values(tag: InequalityId) -> tuple:
    """Eight exponents spread across the tag's validity range."""
    return _REGISTRY[InequalityId(tag)].p_values


def equality_loci(tag: InequalityId, p: float) -> list:
    """Numerically verified equality points (see the locate tests)."""
    info = _REGISTRY[InequalityId(tag)]
    if info.loci is None:
        raise ValueError(f"{InequalityId(tag).value} has no catalogued equality locus")
    return info.loci(p)


def stated_equality_loci(tag: InequalityId, p: float) -> list:
    """Equality points as claimed alongside each bound (not all are actual
    minima; the MIXED_BY_SUM_MID/HIGH claimed angles are falsified by the
    scan, which finds the minimum at arg(wz) = pi - pi/p instead)."""
    info = _REGISTRY[InequalityId(tag)]
    if info.stated_loci is None:
        raise ValueError(f"{InequalityId(tag).value} has no stated equality locus")
    return info.stated_loci(p)


def _check_tag_p(tag: InequalityId, p: float) -> float:
    info = _REGISTRY[tag]
    ok_lo = p >= info.p_lo if info.lo_closed else p > info.p_lo
    ok_hi = p <= info.p_hi if info.hi_closed else p < info.p_hi
    if not (ok_lo and ok_hi):
        lo_b = "[" if info.lo_closed else "("
        hi_b = "]" if info.hi_closed else ")"
        raise ValueError(
            f"{tag.value} is valid for p in {lo_b}{info.p_lo}, {info.p_hi}{hi_b}, got {p}"
        )
    return float(p)


def _scan_2d(slack_fn, p, r_vals, t_vals, tol, chunk=64):
    min_slack = math.inf
    argmin = (float(r_vals[0]), float(t_vals[0]))
    violations: list = []
    t_row = t_vals[None, :]
    for i0 in range(0, len(r_vals), chunk):
        r_col = r_vals[i0 : i0 + chunk, None]
        s = slack_fn(p, r_col, t_row)
        flat = int(np.argmin(s))
        i, j = np.unravel_index(flat, s.shape)
        if s[i, j] < min_slack:
            min_slack = float(s[i, j])
            argmin = (float(r_col[i, 0]), float(t_vals[j]))
        if len(violations) < _MAX_VIOLATIONS:
            bad = np.argwhere(s < -tol)
            for bi, bj in bad[: _MAX_VIOLATIONS - len(violations)]:
                violations.append(
                    ((float(r_col[bi, 0]), float(t_vals[bj])), float(s[bi, bj]))
                )
    return min_slack, argmin, violations


def _scan_1d(slack_fn, p, x_vals, tol):
    s = slack_fn(p, x_vals)
    j = int(np.argmin(s))
    violations = [
        ((float(x_vals[k]),), float(s[k])) for k in np.flatnonzero(s < -tol)[:_MAX_VIOLATIONS]
    ]
    return float(s[j]), (float(x_vals[j]),), violations


def _axis(lo, hi, n, open_lo=False):
    if open_lo:
        lo = lo + (hi - lo) / n
    return np.linspace(lo, hi, n)


def verify_pointwise(
    tag: InequalityId, p: float, grid: GridSpec | None = None
) -> VerificationReport:
    """Scan the tag's slack on the full grid plus one local refinement pass
    around the minimum; report min_slack, argmin, and any violations."""
    tag = InequalityId(tag)
    info = _REGISTRY[tag]
    p = _check_tag_p(tag, p)
    grid = grid or GridSpec()
    start = time.perf_counter()

    if info.arity == 0:
        s = float(info.slack(p))
        report = VerificationReport(
            id=tag.value,
            p=p,
            min_slack=s,
            argmin=(p,),
            grid={"kind": "scalar"},
            violations=[((p,), s)] if s < -grid.tolerance else [],
            tolerance=grid.tolerance,
        )
        report.elapsed_ms = (time.perf_counter() - start) * 1e3
        return report

    if info.arity == 1:
        lo, hi = grid.t_range or info.t_range
        x_vals = _axis(lo, hi, grid.t_nodes)
        min_slack, argmin, violations = _scan_1d(info.slack, p, x_vals, grid.tolerance)
        # refinement around the minimum
        dx = (hi - lo) / (grid.t_nodes - 1)
        x_ref = np.linspace(
            max(lo, argmin[0] - dx), min(hi, argmin[0] + dx), 2 * grid.refine_factor + 1
        )
        m2, a2, v2 = _scan_1d(info.slack, p, x_ref, grid.tolerance)
        if m2 < min_slack:
            min_slack, argmin = m2, a2
        violations.extend(v2[: _MAX_VIOLATIONS - len(violations)])
        report = VerificationReport(
            id=tag.value,
            p=p,
            min_slack=min_slack,
            argmin=argmin,
            grid={"t_nodes": grid.t_nodes, "t_range": [lo, hi]},
            violations=violations,
            tolerance=grid.tolerance,
        )
        report.elapsed_ms = (time.perf_counter() - start) * 1e3
        return report

    r_lo, r_hi = grid.r_range or info.r_range
    t_lo, t_hi = grid.t_range or info.t_range
    r_vals = _axis(r_lo, r_hi, grid.r_nodes, open_lo=(r_lo == 0.0))
    t_vals = _axis(t_lo, t_hi, grid.t_nodes)
    min_slack, argmin, violations = _scan_2d(
        info.slack, p, r_vals, t_vals, grid.tolerance
    )
    dr = (r_vals[-1] - r_vals[0]) / (grid.r_nodes - 1)
    dt = (t_hi - t_lo) / (grid.t_nodes - 1)
    r_ref = np.linspace(
        max(r_vals[0], argmin[0] - dr),
        min(r_hi, argmin[0] + dr),
        2 * grid.refine_factor + 1,
    )
    t_ref = np.linspace(
        max(t_lo, argmin[1] - dt), min(t_hi, argmin[1] + dt), 2 * grid.refine_factor + 1
    )
    m2, a2, v2 = _scan_2d(info.slack, p, r_ref, t_ref, grid.tolerance)
    if m2 < min_slack:
        min_slack, argmin = m2, a2
    violations.extend(v2[: _MAX_VIOLATIONS - len(violations)])
    report = VerificationReport(
        id=tag.value,
        p=p,
        min_slack=min_slack,
        argmin=argmin,
        grid={
            "r_nodes": grid.r_nodes,
            "t_nodes": grid.t_nodes,
            "r_range": [float(r_vals[0]), float(r_hi)],
            "t_range": [t_lo, t_hi],
        },
        violations=violations,
        tolerance=grid.tolerance,
    )
    report.elapsed_ms = (time.perf_counter() - start) * 1e3
    return report


def locate_equality(tag: InequalityId, p: float) -> tuple[tuple, float]:
    """Coarse-to-fine minimization of the slack (three zoom passes).

    Returns (minimizer, slack at minimizer).
    """
    tag = InequalityId(tag)
    info = _REGISTRY[tag]
    p = _check_tag_p(tag, p)
    if info.arity == 0:
        return (p,), float(info.slack(p))

    if info.arity == 1:
        lo, hi = info.t_range
        x = _axis(lo, hi, 1024)
        for _ in range(3):
            s = info.slack(p, x)
            j = int(np.argmin(s))
            dx = x[1] - x[0]
            x = np.linspace(max(lo, x[j] - 2 * dx), min(hi, x[j] + 2 * dx), 129)
        s = info.slack(p, x)
        j = int(np.argmin(s))
        return (float(x[j]),), float(s[j])

    r_lo, r_hi = info.r_range
    t_lo, t_hi = info.t_range
    r = _axis(r_lo, r_hi, 512, open_lo=(r_lo == 0.0))
    t = _axis(t_lo, t_hi, 1024)
    best = ((float(r[-1]), float(t[0])), math.inf)
    for _ in range(3):
        m, a, _v = _scan_2d(info.slack, p, r, t, math.inf)
        best = (a, m)
        dr, dt = r[1] - r[0], t[1] - t[0]
        r = np.linspace(max(r_lo, a[0] - 2 * dr), min(r_hi, a[0] + 2 * dr), 65)
        t = np.linspace(max(t_lo, a[1] - 2 * dt), min(t_hi, a[1] + 2 * dt), 65)
    m, a, _v = _scan_2d(info.slack, p, r, t, math.inf)
    if m < best[1]:
        best = (a, m)
    return best


_UNREDUCED_LOW = (InequalityId.MIXED_BY_SUM_LOW, InequalityId.MIXED_BY_SUM_RADIAL)
_UNREDUCED_MIXED = _UNREDUCED_LOW + (
    InequalityId.MIXED_BY_SUM_MID,
    InequalityId.MIXED_BY_SUM_HIGH,
)
_UNREDUCED_SUM = (
    InequalityId.SUM_BY_MIXED_HIGH,
    InequalityId.SUM_BY_MIXED_RADIAL,
    InequalityId.SUM_BY_MIXED_LOW,
)


def unreduced_slack(tag: InequalityId, p: float, z: complex, w: complex) -> float:
    """Slack evaluated directly on complex (z, w) through the two-variable
    minorants, bypassing the (r, t) reduction; used to validate the reduction."""
    tag = InequalityId(tag)
    p = _check_tag_p(tag, p)
    z, w = complex(z), complex(w)
    mod_sum = abs(z + w.conjugate()) ** p
    mixed = (abs(z) ** 2 + abs(w) ** 2) ** (0.5 * p)
    if tag in _UNREDUCED_MIXED:
        low = tag in _UNREDUCED_LOW
        a = sharp_constant(SC.A_LOW_P if low else SC.A_HIGH_P, p)
        b = sharp_constant(SC.B_LOW_P if low else SC.B_HIGH_P, p)
        t1 = a * mod_sum
        t2 = b * minorant_F(z, w, p)
        t3 = mixed
    elif tag in _UNREDUCED_SUM:
        low = tag is InequalityId.SUM_BY_MIXED_LOW
        c = sharp_constant(SC.C_LOW_P if low else SC.C_HIGH_P, p)
        d = sharp_constant(SC.D_LOW_P if low else SC.D_HIGH_P, p)
        t1 = c * mixed
        t2 = d * minorant_G(z, w, p)
        t3 = mod_sum
    else:
        raise ValueError(f"{tag.value} has no two-variable form")
    return float(_normalized(t1, t2, t3))


# ------------------------------ subharmonicity ------------------------------


def _circle_mean_with_estimate(fn, center: complex, rho: float, angles: int):
    """Trapezoid circle mean plus a two-grid discretization-error estimate."""
    theta = np.arange(angles) * (TWO_PI / angles)
    vals = np.asarray(fn(center + rho * np.exp(1j * theta)), dtype=float)
    mean = float(np.mean(vals))
    half = float(np.mean(vals[::2]))
    return mean, abs(mean - half)


def _minorant_fn(mid: Minorant, p: float) -> Callable:
    mid = Minorant(mid)
    if mid in (Minorant.F_PAIR, Minorant.G_PAIR):
        raise ValueError(
            f"{mid.value} is a two-variable minorant; use check_pluri_lines"
        )
    return lambda z: minorant_value(mid, z, p)


def origin_circle_mean(mid: Minorant, p: float, rho: float) -> float:
    """Circle average over |z| = rho of a single-variable minorant, by an
    independent route: closed form for the cosine-family profiles,

        mean = +/- 2 sin(p pi / 2) / (p pi) * rho^{p/2},

    adaptive quadrature of the angular profile for the theta-based ones.
    """
    mid = Minorant(mid)
    scale = rho ** (0.5 * p)
    if mid is Minorant.RE_BRANCH:
        return 2.0 * math.sin(0.5 * p * math.pi) / (p * math.pi) * scale
    if mid is Minorant.PHI_MID:
        return -2.0 * math.sin(0.5 * p * math.pi) / (p * math.pi) * scale
    if mid is Minorant.PSI and p < 2.0:
        return 2.0 * math.sin(0.5 * p * math.pi) / (p * math.pi) * scale

    fn = _minorant_fn(mid, p)

    def profile(theta: float) -> float:
        return float(fn(np.exp(1j * theta)))

    val, _ = integrate.quad(profile, -math.pi, math.pi, limit=400, epsabs=1e-12)
    return val / TWO_PI * scale


def check_submean(
    minorant_or_fn,
    p: float,
    centers: int = 64,
    radii: int = 16,
    angles: int = 1024,
    seed: int = 0,
    tolerance: float = 1e-9,
) -> VerificationReport:
    """Sub-mean-value test: circle averages must dominate the center value.

    Random centers in the disk of radius 2 with random circle radii
    rho <= |z0| (plus z0 = 0 explicitly, where the trapezoid average is also
    compared against origin_circle_mean).  The deficit is cushioned by twice
    the two-grid discretization estimate, so exact-equality (harmonic) cases
    are not flagged by trapezoid noise while genuine violations, which are
    O(1), still surface.
    """
    if angles < 256:
        raise ValueError("angles must be >= 256")
    if centers < 1 or radii < 1:
        raise ValueError("centers and radii must be >= 1")
    start = time.perf_counter()
    if callable(minorant_or_fn):
        fn = minorant_or_fn
        tag = getattr(minorant_or_fn, "__name__", "custom")
        origin_reference = None
    else:
        mid = Minorant(minorant_or_fn)
        fn = _minorant_fn(mid, p)
        tag = mid.value
        origin_reference = lambda rho: origin_circle_mean(mid, p, rho)  # noqa: E731

    rng = np.random.default_rng(seed)
    worst = math.inf
    argmin = None
    violations: list = []

    def record(center: complex, rho: float):
        nonlocal worst, argmin
        mean, err = _circle_mean_with_estimate(fn, center, rho, angles)
        deficit = mean - float(np.real(fn(np.asarray(center)))) + 2.0 * err
        if deficit < worst:
            worst = deficit
            argmin = (center.real, center.imag, rho)
        if deficit < -tolerance and len(violations) < _MAX_VIOLATIONS:
            violations.append(((center.real, center.imag, rho), float(deficit)))
        return mean, err

    for _ in range(centers):
        z0 = 2.0 * math.sqrt(rng.uniform()) * np.exp(1j * rng.uniform(0.0, TWO_PI))
        z0 = complex(z0)
        for _ in range(radii):
            rho = abs(z0) * rng.uniform(1e-3, 1.0)
            record(z0, rho)

    # explicit origin pass with the independent mean comparison
    for _ in range(radii):
        rho = 2.0 * rng.uniform(1e-3, 1.0)
        mean, err = record(0.0 + 0.0j, rho)
        if origin_reference is not None:
            ref = origin_reference(rho)
            allowance = 64.0 * max(1.0, abs(ref)) / angles**2 + 4.0 * err + 1e-10
            if abs(mean - ref) > allowance and len(violations) < _MAX_VIOLATIONS:
                violations.append(((0.0, 0.0, rho), float(mean - ref)))

    report = VerificationReport(
        id=tag,
        p=p,
        min_slack=worst,
        argmin=argmin,
        grid={"centers": centers, "radii": radii, "angles": angles},
        violations=violations,
        seed=seed,
        tolerance=tolerance,
    )
    report.elapsed_ms = (time.perf_counter() - start) * 1e3
    return report


def check_pluri_lines(
    mid: Minorant,
    p: float,
    n_lines: int = 64,
    seed: int = 0,
    centers: int = 6,
    radii: int = 4,
    angles: int = 1024,
    tolerance: float = 1e-8,
) -> VerificationReport:
    """Plurisubharmonicity probe: restrict the two-variable minorant to random
    complex lines tau -> (z0 + tau w1, w0 + tau w2) and run the sub-mean test
    on the restriction.  Constant lines give deficit 0 by construction."""
    mid = Minorant(mid)
    if mid not in (Minorant.F_PAIR, Minorant.G_PAIR):
        raise ValueError("check_pluri_lines applies to the two-variable minorants")
    if n_lines < 16:
        raise ValueError("n_lines must be >= 16")
    two_var = minorant_F if mid is Minorant.F_PAIR else minorant_G
    start = time.perf_counter()
    rng = np.random.default_rng(seed)
    worst = math.inf
    argmin = None
    violations: list = []
    for line in range(n_lines):
        z0, w0, w1, w2 = (
            complex(math.sqrt(rng.uniform()) * 1.25 * np.exp(1j * rng.uniform(0, TWO_PI)))
            for _ in range(4)
        )

        def restricted(tau):
            return two_var(z0 + tau * w1, w0 + tau * w2, p)

        for _ in range(centers):
            c = complex(math.sqrt(rng.uniform()) * np.exp(1j * rng.uniform(0, TWO_PI)))
            for _ in range(radii):
                rho = 0.75 * rng.uniform(1e-3, 1.0)
                mean, err = _circle_mean_with_estimate(restricted, c, rho, angles)
                deficit = mean - float(np.real(restricted(np.asarray(c)))) + 2.0 * err
                if deficit < worst:
                    worst = deficit
                    argmin = (line, c.real, c.imag, rho)
                if deficit < -tolerance and len(violations) < _MAX_VIOLATIONS:
                    violations.append(((line, c.real, c.imag, rho), float(deficit)))
    report = VerificationReport(
        id=mid.value,
        p=p,
        min_slack=worst,
        argmin=argmin,
        grid={"n_lines": n_lines, "centers": centers, "radii": radii, "angles": angles},
        violations=violations,
        seed=seed,
        tolerance=tolerance,
    )
    report.elapsed_ms = (time.perf_counter() - start) * 1e3
    return report
