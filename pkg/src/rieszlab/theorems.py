"""End-to-end verification of the function-space theorems on sampled
harmonic polynomials, closed-form line pairs, and the Calderon family.

Each tag binds a hypothesis class (a constraint on g(0)h(0), or a structural
form like holomorphic h = 0), a left- and right-hand side computed through
the norm machinery, and the sharp constant.  Sharpness is reported as a
statistic (max observed ratio LHS/RHS), never asserted as attained: the
extremizers lie outside the polynomial class.  Only the Calderon probes make
a quantitative approach claim, and only for p < 2, where the family's
boundary ratios (sec, sin, tan of gamma) converge to the constants from
below.
"""

from __future__ import annotations

import math
import time
from enum import Enum
from typing import Sequence

from .constants import SharpConstant as SC, sharp_constant
from .hilbert import LineKind, LinePair, conjugate_map, line_lp_norm
from .maps import (
    CalderonFamily,
    Constraint,
    HarmonicMap,
    TaylorPoly,
    random_harmonic,
    random_poly,
)
from .quadrature import (
    QuadratureSpec,
    bergman_norm,
    bergman_triple_norm,
    calderon_norm,
    circle_power_mean,
    disk_power_mean,
    hardy_norm,
    pair_circle_power_mean,
    pair_disk_power_mean,
    product_circle_power_mean,
    product_disk_power_mean,
    triple_norm,
)
from .reporting import VerificationReport

__all__ = [
    "TheoremId",
    "theorem_constant",
    "verify_theorem",
    "isoperimetric_chain",
    "verify_pair_isoperimetric",
    "sharpness_probe",
]


class TheoremId(Enum):
    MIXED_BY_HARDY = "MIXED_BY_HARDY"            # |||f|||_p <= A_p ||f||_p, Re(g0 h0) = 0
    HARDY_BY_MIXED = "HARDY_BY_MIXED"            # ||f||_p <= B_p |||f|||_p, Re(g0 h0) <= 0
    CONJUGATE_NORM = "CONJUGATE_NORM"            # ||f~||_p <= cot(pi/2pbar) ||f||_p
    ANALYTIC_BY_RE = "ANALYTIC_BY_RE"            # ||g||_p <= csc(pi/2pbar) ||Re g||_p, Im g(0)=0
    IM_BY_ANALYTIC = "IM_BY_ANALYTIC"            # ||Im g||_p <= cos(pi/2pbar) ||g||_p, Im g(0)=0
    BERGMAN_MIXED_BY_NORM = "BERGMAN_MIXED_BY_NORM"  # Bergman version of MIXED_BY_HARDY
    BERGMAN_NORM_BY_MIXED = "BERGMAN_NORM_BY_MIXED"  # Bergman version of HARDY_BY_MIXED
    LINE_PAIRS = "LINE_PAIRS"                    # ||phi~||_p <= cot(pi/2pbar) ||phi||_p, catalog
    BERGMAN_EMBEDDING = "BERGMAN_EMBEDDING"      # ||f||_{b^{2n}} <= (1/2)csc(pi/4n) ||f||_{h^n}
    STREBEL = "STREBEL"                          # int_U |f|^2 <= (int_T |f|)^2, holomorphic f
    PAIR_ISOPERIMETRIC = "PAIR_ISOPERIMETRIC"    # int_U S^{2p} <= (int_T S^p)^2


_LINE_CATALOG = (
    LinePair(LineKind.POISSON_KERNEL, 1.0),
    LinePair(LineKind.POISSON_KERNEL, 0.5),
    LinePair(LineKind.LORENTZIAN),
    LinePair(LineKind.INDICATOR),
)


def theorem_constant(tag: TheoremId, p: float | None = None, n: int | None = None) -> float:
    """The constant appearing on the right-hand side of a tag's bound."""
    tag = TheoremId(tag)
    if tag in (TheoremId.MIXED_BY_HARDY, TheoremId.BERGMAN_MIXED_BY_NORM):
        return sharp_constant(SC.A, p)
    if tag is TheoremId.HARDY_BY_MIXED:
        return sharp_constant(SC.B, p)
    if tag is TheoremId.BERGMAN_NORM_BY_MIXED:
        # sqrt(2) cos(pi/(2 pbar)); the sqrt(2) sin variant is falsified by
        # f = z at p = 4 (regression-locked in the tests)
        return sharp_constant(SC.B, p)
    if tag in (TheoremId.CONJUGATE_NORM, TheoremId.LINE_PAIRS):
        return sharp_constant(SC.HILBERT_NORM, p)
    if tag is TheoremId.ANALYTIC_BY_RE:
        # csc(pi/(2 pbar)); the sec variant fails numerically for p != 2
        return sharp_constant(SC.VERBITSKY_CSC, p)
    if tag is TheoremId.IM_BY_ANALYTIC:
        # cos(pi/(2 pbar)) (= 1/VERBITSKY_SEC); the sin variant is falsified
        return 1.0 / sharp_constant(SC.VERBITSKY_SEC, p)
    if tag is TheoremId.BERGMAN_EMBEDDING:
        return sharp_constant(SC.ISOP, n=n)
    if tag in (TheoremId.STREBEL, TheoremId.PAIR_ISOPERIMETRIC):
        return 1.0
    raise AssertionError(tag)


def _analytic_sample(degree: int, seed: int) -> TaylorPoly:
    """Random analytic g with real g(0) (so Im g(0) = 0)."""
    g = random_poly(degree, seed)
    coeffs = list(g.coeffs)
    coeffs[0] = complex(coeffs[0].real, 0.0)
    return TaylorPoly(coeffs)


def _real_part_map(g: TaylorPoly) -> HarmonicMap:
    """Re g = (g/2) + conj(g/2) as a harmonic map."""
    half = g.scaled(0.5)
    return HarmonicMap(half, half)


def _imag_part_map(g: TaylorPoly) -> HarmonicMap:
    """Im g = (-i g/2) + conj(-i g/2) as a harmonic map."""
    half = g.scaled(-0.5j)
    return HarmonicMap(half, half)


def _sample_sides(
    tag: TheoremId, p_or_n, degree: int, seed: int, spec: QuadratureSpec | None
) -> tuple[float, float]:
    """(LHS, RHS-without-constant) for one sample of the tag."""
    if tag is TheoremId.MIXED_BY_HARDY:
        m = random_harmonic(degree, seed, Constraint.RE_ZERO)
        return triple_norm(m, p_or_n, spec), hardy_norm(m, p_or_n, spec)
    if tag is TheoremId.HARDY_BY_MIXED:
        m = random_harmonic(degree, seed, Constraint.RE_NONPOS)
        return hardy_norm(m, p_or_n, spec), triple_norm(m, p_or_n, spec)
    if tag is TheoremId.CONJUGATE_NORM:
        m = random_harmonic(degree, seed, Constraint.NONE).normalized()
        return hardy_norm(conjugate_map(m), p_or_n, spec), hardy_norm(m, p_or_n, spec)
    if tag is TheoremId.ANALYTIC_BY_RE:
        g = _analytic_sample(degree, seed)
        return (
            hardy_norm(HarmonicMap(g, TaylorPoly([0])), p_or_n, spec),
            hardy_norm(_real_part_map(g), p_or_n, spec),
        )
    if tag is TheoremId.IM_BY_ANALYTIC:
        g = _analytic_sample(degree, seed)
        return (
            hardy_norm(_imag_part_map(g), p_or_n, spec),
            hardy_norm(HarmonicMap(g, TaylorPoly([0])), p_or_n, spec),
        )
    if tag is TheoremId.BERGMAN_MIXED_BY_NORM:
        m = random_harmonic(degree, seed, Constraint.RE_ZERO)
        return bergman_triple_norm(m, p_or_n, spec), bergman_norm(m, p_or_n, spec)
    if tag is TheoremId.BERGMAN_NORM_BY_MIXED:
        m = random_harmonic(degree, seed, Constraint.RE_NONPOS)
        return bergman_norm(m, p_or_n, spec), bergman_triple_norm(m, p_or_n, spec)
    if tag is TheoremId.BERGMAN_EMBEDDING:
        n = int(p_or_n)
        m = random_harmonic(degree, seed, Constraint.NONE).normalized()
        return bergman_norm(m, 2 * n, spec), hardy_norm(m, n, spec)
    if tag is TheoremId.STREBEL:
        f = random_poly(degree, seed)
        m = HarmonicMap(f, TaylorPoly([0]))
        return disk_power_mean(m, 2.0, spec), circle_power_mean(m, 1.0, 1.0, spec) ** 2
    raise AssertionError(tag)


def verify_theorem(
    tag: TheoremId,
    p_or_n,
    samples: int = 200,
    degree: int = 8,
    seed: int = 0,
    rel_tol: float = 1e-9,
    spec: QuadratureSpec | None = None,
) -> VerificationReport:
    """Check LHS <= constant * RHS * (1 + rel_tol) over the sample battery.

    min_slack is the worst relative slack (RHS_total - LHS)/RHS_total;
    ratio_max the largest observed LHS/RHS_total (a sharpness statistic).
    """
    tag = TheoremId(tag)
    start = time.perf_counter()
    if tag is TheoremId.BERGMAN_EMBEDDING:
        n = int(p_or_n)
        if n < 2 or n != p_or_n:
            raise ValueError(f"BERGMAN_EMBEDDING requires integer n >= 2, got {p_or_n}")
        constant = theorem_constant(tag, n=n)
    elif tag is TheoremId.PAIR_ISOPERIMETRIC:
        if not p_or_n > 0:
            raise ValueError(f"PAIR_ISOPERIMETRIC requires p > 0, got {p_or_n}")
        constant = 1.0
    elif tag is TheoremId.STREBEL:
        constant = 1.0
    else:
        if not p_or_n > 1:
            raise ValueError(f"{tag.value} requires p > 1, got {p_or_n}")
        constant = theorem_constant(tag, p=p_or_n)

    worst = math.inf
    argmin = None
    ratio_max = 0.0
    violations: list = []

    if tag is TheoremId.LINE_PAIRS:
        cases = [(pair, None) for pair in _LINE_CATALOG]
    else:
        cases = [(None, seed + k) for k in range(samples)]

    for pair, case_seed in cases:
        if tag is TheoremId.LINE_PAIRS:
            lhs = line_lp_norm(pair, p_or_n, transformed=True)
            rhs_base = line_lp_norm(pair, p_or_n, transformed=False)
            label = (pair.kind.value, pair.parameter)
        elif tag is TheoremId.PAIR_ISOPERIMETRIC:
            a = random_poly(degree, case_seed)
            b = random_poly(degree, case_seed + 10_000_019)
            rep = verify_pair_isoperimetric(a, b, p_or_n, spec)
            lhs, rhs_base = rep._lhs_rhs  # type: ignore[attr-defined]
            label = (case_seed,)
        else:
            lhs, rhs_base = _sample_sides(tag, p_or_n, degree, case_seed, spec)
            label = (case_seed,)
        rhs = constant * rhs_base
        if rhs == 0.0:
            continue
        slack = (rhs - lhs) / rhs
        ratio_max = max(ratio_max, lhs / rhs)
        if slack < worst:
            worst = slack
            argmin = label
        if slack < -rel_tol and len(violations) < 100:
            violations.append((label, float(slack)))

    report = VerificationReport(
        id=tag.value,
        p=p_or_n,
        min_slack=worst,
        argmin=argmin,
        grid={"samples": len(cases), "degree": degree},
        violations=violations,
        constant=constant,
        ratio_max=ratio_max,
        seed=seed,
        tolerance=rel_tol,
    )
    report.elapsed_ms = (time.perf_counter() - start) * 1e3
    return report


def verify_pair_isoperimetric(
    a: TaylorPoly,
    b: TaylorPoly,
    p: float,
    spec: QuadratureSpec | None = None,
    rel_tol: float = 1e-9,
) -> VerificationReport:
    """int_U (|a|^2+|b|^2)^{2p} <= (int_T (|a|^2+|b|^2)^p)^2 for p > 0."""
    if not p > 0:
        raise ValueError(f"p must be > 0, got {p}")
    start = time.perf_counter()
    lhs = pair_disk_power_mean(a, b, 2.0 * p, spec)
    rhs = pair_circle_power_mean(a, b, p, 1.0, spec) ** 2
    slack = (rhs - lhs) / rhs if rhs else math.inf
    report = VerificationReport(
        id="PAIR_ISOPERIMETRIC",
        p=p,
        min_slack=slack,
        ratio_max=lhs / rhs if rhs else math.inf,
        violations=[(("pair",), slack)] if slack < -rel_tol else [],
        constant=1.0,
        tolerance=rel_tol,
    )
    report._lhs_rhs = (lhs, rhs)  # type: ignore[attr-defined]
    report.elapsed_ms = (time.perf_counter() - start) * 1e3
    return report


def isoperimetric_chain(
    m: HarmonicMap, n: int, spec: QuadratureSpec | None = None, rel_tol: float = 1e-9
) -> list[tuple[str, float]]:
    """The inequality chain behind the Bergman embedding, link by link.

    Returns the ordered quantities

      L      = int_U |f|^{2n}
      holder = sum_k C(n,k) (int_U S^n)^{k/n} (int_U |2 Re gh|^n)^{(n-k)/n}
      cosine = same with int_U |2 Re gh|^n replaced by E_n^n int_U (2|gh|)^n
      square = boundary squares via the pair isoperimetric inequality
      am_gm  = (1+E_n)^n (int_T S^{n/2})^2
      final  = (1+E_n)^n (1-cos(pi/n))^{-n} (int_T |f|^n)^2

    with S = |g|^2 + |h|^2, E_n = cos(pi/(2n)), after normalizing h(0) = 0
    (the cosine link needs Re((2gh)(0)) = 0).  Each link must dominate the
    previous one; a violation beyond rel_tol raises ValueError.  final equals
    ((1/2) csc(pi/(4n)))^{2n} (int_T |f|^n)^2 by the half-angle identity.
    """
    if n != int(n) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n}")
    n = int(n)
    m = m.normalized()
    g, h = m.g, m.h
    e_n = math.cos(math.pi / (2.0 * n))

    big_l = disk_power_mean(m, 2.0 * n, spec)
    disk_s = pair_disk_power_mean(g, h, float(n), spec)
    disk_re = product_disk_power_mean(g, h, float(n), real_part=True, spec=spec)
    disk_abs = product_disk_power_mean(g, h, float(n), real_part=False, spec=spec)
    circ_s = pair_circle_power_mean(g, h, 0.5 * n, 1.0, spec)
    circ_abs = product_circle_power_mean(g, h, 0.5 * n, False, 1.0, spec)
    circ_f = circle_power_mean(m, float(n), 1.0, spec)

    def binomial_sum(x_disk: float, y_disk: float) -> float:
        total = 0.0
        for k in range(n + 1):
            total += (
                math.comb(n, k)
                * x_disk ** (k / n)
                * (e_n**n * y_disk) ** ((n - k) / n)
            )
        return total

    holder = 0.0
    for k in range(n + 1):
        holder += math.comb(n, k) * disk_s ** (k / n) * disk_re ** ((n - k) / n)
    cosine = binomial_sum(disk_s, disk_abs)
    square = binomial_sum(circ_s**2, circ_abs**2)
    am_gm = (1.0 + e_n) ** n * circ_s**2
    final = (1.0 + e_n) ** n * (1.0 - math.cos(math.pi / n)) ** (-n) * circ_f**2

    chain = [
        ("L", big_l),
        ("holder", holder),
        ("cosine", cosine),
        ("square", square),
        ("am_gm", am_gm),
        ("final", final),
    ]
    for (name_lo, lo), (name_hi, hi) in zip(chain, chain[1:]):
        if lo > hi * (1.0 + rel_tol):
            raise ValueError(
                f"chain link broken: {name_lo} = {lo:.12g} > {name_hi} = {hi:.12g}"
            )
    return chain


def sharpness_probe(
    tag: TheoremId,
    p: float,
    gamma_fractions: Sequence[float],
    rel_tol: float = 1e-8,
) -> list[float]:
    """Calderon-family ratios approaching a tag's constant from below (p < 2).

    For each fraction, gamma = fraction * pi/(2p) and the ratio is

      CONJUGATE_NORM : ||v||_p / ||u||_p   (-> tan(pi/2p) = cot(pi/(2 pbar)))
      ANALYTIC_BY_RE : ||g||_p / ||u||_p   (-> sec(pi/2p) = csc(pi/(2 pbar)))
      IM_BY_ANALYTIC : ||v||_p / ||g||_p   (-> sin(pi/2p) = cos(pi/(2 pbar)))

    where u, v are the real and imaginary parts of the family's trace (v is
    the mean-normalized conjugate of u).  The returned sequence is increasing.
    """
    tag = TheoremId(tag)
    if tag not in (
        TheoremId.CONJUGATE_NORM,
        TheoremId.ANALYTIC_BY_RE,
        TheoremId.IM_BY_ANALYTIC,
    ):
        raise ValueError(f"no Calderon probe for {tag.value}")
    if not 1.0 < p < 2.0:
        raise ValueError(f"the Calderon probes run in the 1 < p < 2 regime, got p={p}")
    ratios = []
    for frac in gamma_fractions:
        if not 0.0 < frac < 1.0:
            raise ValueError(f"gamma fractions must lie in (0, 1), got {frac}")
        fam = CalderonFamily(gamma=frac * math.pi / (2.0 * p), p=p)
        if tag is TheoremId.CONJUGATE_NORM:
            num = calderon_norm(fam, p, "im", rel_tol)
            den = calderon_norm(fam, p, "re", rel_tol)
        elif tag is TheoremId.ANALYTIC_BY_RE:
            num = calderon_norm(fam, p, "analytic", rel_tol)
            den = calderon_norm(fam, p, "re", rel_tol)
        else:
            num = calderon_norm(fam, p, "im", rel_tol)
            den = calderon_norm(fam, p, "analytic", rel_tol)
        ratios.append(num / den)
    return ratios
