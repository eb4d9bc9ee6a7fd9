"""Local behavior of f-divergences along mixture paths.

As the mixture weight of P in lam*P + (1-lam)*Q goes to zero, every
divergence with a finite f''(1) scales like (1/2) f''(1) chi^2(P||Q) lam^2.
This module holds the exact chi^2 / chi^s mixture identities, the
three-measure chi^2 expansion, and Richardson-extrapolated estimates of
the lam -> 0 limits used to verify the scaling numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .distributions import DiscreteDistribution, mixture
from .divergences import divergence, f_divergence, renyi
from .errors import CapabilityError, DomainError
from .generators import GeneratorFunction

__all__ = [
    "LocalLimitEstimate",
    "chi2_mixture_scaling",
    "chis_mixture_scaling",
    "chi2_mixture_three",
    "local_limit_estimate",
    "renyi_local_estimate",
    "ratio_limit_pair",
]

_LAMBDA_GRID = (1e-1, 1e-2, 1e-3, 1e-4)


@dataclass(frozen=True)
class LocalLimitEstimate:
    """Richardson-extrapolated lam -> 0 limit of D(mixture)/lam^2.

    ``residual`` is the change between the last two extrapolants -- an
    honest stability estimate, reported rather than hidden.  ``target`` is
    the predicted limit (1/2) f''(1) chi^2(P||Q).
    """

    lambdas: tuple[float, ...]
    ratios: tuple[float, ...]
    extrapolated: float
    target: float
    residual: float


def _require_supported(p: DiscreteDistribution, q: DiscreteDistribution) -> None:
    for i, (pm, qm) in enumerate(zip(p.masses, q.masses)):
        if pm > 0.0 and qm == 0.0:
            raise DomainError(f"atom {i} has P-mass where Q vanishes")


def chi2_mixture_scaling(
    p: DiscreteDistribution, q: DiscreteDistribution, lam: float
) -> float:
    """chi^2(lam P + (1-lam) Q || Q); equals lam^2 chi^2(P||Q) exactly."""
    if not 0.0 <= lam <= 1.0:
        raise DomainError("mixture weight must lie in [0, 1]")
    return float(divergence("chi2", mixture(p, q, lam), q))


def chis_mixture_scaling(
    p: DiscreteDistribution, q: DiscreteDistribution, s: float, lam: float
) -> float:
    """chi^s(lam P + (1-lam) Q || Q); equals lam^s chi^s(P||Q) exactly."""
    if not 0.0 <= lam <= 1.0:
        raise DomainError("mixture weight must lie in [0, 1]")
    return float(divergence("chi_s", mixture(p, q, lam), q, s=s))


def chi2_mixture_three(
    p: DiscreteDistribution,
    q: DiscreteDistribution,
    r: DiscreteDistribution,
    lam: float,
) -> tuple[float, float]:
    """chi^2 of the (P,Q)-mixture against a third measure R.

    Returns (value, c) where value = chi^2(lam P + (1-lam) Q || R) and
    c = 2 sum (p-q) q / r is the linear coefficient of the exact expansion
    value - chi^2(Q||R) = c lam + (chi^2(P||R) - chi^2(Q||R) - c) lam^2,
    i.e. the derivative of the mixture chi^2 in lam at 0.  (Expanding
    (mix - r)^2 = lam^2 (p-q)^2 + 2 lam (p-q)(q-r) + (q-r)^2 shows the
    cross term integrates to 2 sum (p-q) q / r; without the factor 2 the
    expansion does not close.)  c vanishes when Q = R, recovering the pure
    quadratic scaling.
    """
    if not 0.0 <= lam <= 1.0:
        raise DomainError("mixture weight must lie in [0, 1]")
    terms = []
    for pm, qm, rm in zip(p.masses, q.masses, r.masses):
        if rm == 0.0:
            if pm > 0.0 or qm > 0.0:
                raise DomainError("R must dominate both P and Q")
            continue
        terms.append((pm - qm) * qm / rm)
    c = 2.0 * math.fsum(terms)
    value = float(divergence("chi2", mixture(p, q, lam), r))
    return value, c


def _richardson(ratios) -> tuple[float, float]:
    # assumes an expansion ratio(lam) = L + a lam + O(lam^2) on a grid
    # shrinking by 10x; one elimination level per adjacent pair
    extraps = [
        (10.0 * r1 - r0) / 9.0 for r0, r1 in zip(ratios, ratios[1:])
    ]
    residual = abs(extraps[-1] - extraps[-2]) if len(extraps) > 1 else math.inf
    return extraps[-1], residual


def local_limit_estimate(
    f: GeneratorFunction,
    p: DiscreteDistribution,
    q: DiscreteDistribution,
    direction: str = "mixture_first",
) -> LocalLimitEstimate:
    """Estimate the lam -> 0 limit of D_f(mixture)/lam^2.

    direction="mixture_first" perturbs the first argument,
    "mixture_second" the second; both converge to the same target
    (1/2) f''(1) chi^2(P||Q).
    """
    if direction not in ("mixture_first", "mixture_second"):
        raise DomainError(f"unknown direction {direction!r}")
    if f.second_at_one is None or not math.isfinite(f.second_at_one):
        raise CapabilityError(f"generator {f.family} lacks a finite f''(1)")
    _require_supported(p, q)
    ratios = []
    for lam in _LAMBDA_GRID:
        r = mixture(p, q, lam)
        if direction == "mixture_first":
            val = float(f_divergence(f, r, q))
        else:
            val = float(f_divergence(f, q, r))
        ratios.append(val / (lam * lam))
    target = 0.5 * f.second_at_one * float(divergence("chi2", p, q))
    extrapolated, residual = _richardson(ratios)
    return LocalLimitEstimate(
        lambdas=_LAMBDA_GRID,
        ratios=tuple(ratios),
        extrapolated=extrapolated,
        target=target,
        residual=residual,
    )


def renyi_local_estimate(
    alpha: float,
    p: DiscreteDistribution,
    q: DiscreteDistribution,
    direction: str = "mixture_first",
) -> LocalLimitEstimate:
    """Same mixture-path limit for the Renyi divergence of order alpha;
    the target is (1/2) alpha chi^2(P||Q) in nats.

    Order 0 vanishes identically along mixture paths (the mixture keeps
    Q's support); order infinity diverges and is reported as such.
    """
    if alpha < 0.0:
        raise DomainError("Renyi order must be non-negative")
    _require_supported(p, q)
    chi2 = float(divergence("chi2", p, q))
    if alpha == 0.0:
        zeros = tuple(0.0 for _ in _LAMBDA_GRID)
        return LocalLimitEstimate(_LAMBDA_GRID, zeros, 0.0, 0.0, 0.0)
    if math.isinf(alpha):
        ratios = []
        for lam in _LAMBDA_GRID:
            r = mixture(p, q, lam)
            d_inf = max(
                math.log(rm / qm) for rm, qm in zip(r.masses, q.masses) if qm > 0.0
            )
            ratios.append(d_inf / (lam * lam))
        target = math.inf if chi2 > 0.0 else 0.0
        return LocalLimitEstimate(
            _LAMBDA_GRID, tuple(ratios), math.inf if chi2 > 0.0 else 0.0,
            target, math.inf,
        )
    ratios = []
    for lam in _LAMBDA_GRID:
        r = mixture(p, q, lam)
        if direction == "mixture_first":
            val = float(renyi(alpha, r, q))
        else:
            val = float(renyi(alpha, q, r))
        ratios.append(val / (lam * lam))
    extrapolated, residual = _richardson(ratios)
    return LocalLimitEstimate(
        lambdas=_LAMBDA_GRID,
        ratios=tuple(ratios),
        extrapolated=extrapolated,
        target=0.5 * alpha * chi2,
        residual=residual,
    )


def ratio_limit_pair(
    f: GeneratorFunction,
    g: GeneratorFunction,
    p: DiscreteDistribution,
    q: DiscreteDistribution,
) -> float:
    """Extrapolated limit of D_f/D_g along the mixture path; converges to
    f''(1)/g''(1) whenever both second derivatives exist and g''(1) > 0."""
    if g.second_at_one is None or not g.second_at_one > 0.0:
        raise DomainError("denominator generator needs g''(1) > 0")
    if f.second_at_one is None or not math.isfinite(f.second_at_one):
        raise CapabilityError(f"generator {f.family} lacks a finite f''(1)")
    _require_supported(p, q)
    lambdas = (1e-2, 1e-3, 1e-4)
    ratios = []
    for lam in lambdas:
        r = mixture(p, q, lam)
        num = float(f_divergence(f, r, q))
        den = float(f_divergence(g, r, q))
        if den == 0.0:
            raise DomainError("distributions must differ for the ratio limit")
        ratios.append(num / den)
    extrapolated, _ = _richardson(ratios)
    return extrapolated
