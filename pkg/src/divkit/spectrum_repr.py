"""Integral representations of f-divergences via the relative information
spectrum.

Every engine here reduces the spectrum to segments on which it is constant
and then integrates the representation kernel segment by segment: exactly
where the kernel has an elementary antiderivative (powers of beta,
1/(beta+1)^2), by adaptive 21-point Gauss-Kronrod quadrature otherwise
(the logarithmic kernels of Lin/Jensen-Shannon/Jeffreys).  This makes the
agreement tests a check of the formulas rather than of the quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .distributions import (
    DiscreteDistribution,
    SpectrumFunction,
    spectrum,
    spectrum_eval,
)
from .divergences import divergence
from .errors import (
    AbsoluteContinuityError,
    CapabilityError,
    DomainError,
    KinkError,
    UnknownKindError,
)
from .generators import GeneratorFunction, g_eval, g_inverse, weight
from .quadrature import integrate

__all__ = [
    "SegmentedIntegrand",
    "g_segments",
    "represent_general",
    "represent_inverse_g",
    "represent_named",
    "spectrum_identity",
    "spectrum_from_egamma",
    "spectrum_from_degroot",
    "represent_degroot_weight",
]


@dataclass(frozen=True)
class SegmentedIntegrand:
    """Piecewise-constant tail function on likelihood-ratio segments.

    ``segments`` is a sorted tuple of (beta_lo, beta_hi, g_value) covering
    [beta_min, beta_max] with a cut at beta = 1; g_value is the constant
    value of the spectral tail function G on the open segment.
    """

    segments: tuple[tuple[float, float, float], ...]

    @property
    def beta_min(self) -> float:
        return self.segments[0][0] if self.segments else 1.0

    @property
    def beta_max(self) -> float:
        return self.segments[-1][1] if self.segments else 1.0


def _require_pq_dominated(f: SpectrumFunction) -> None:
    if f.singular_mass_p != 0.0:
        raise AbsoluteContinuityError(
            "P is not absolutely continuous w.r.t. Q "
            f"(P-mass {f.singular_mass_p} sits where Q vanishes)"
        )


def _require_qp_dominated(f: SpectrumFunction) -> None:
    if f.singular_mass_q != 0.0:
        raise AbsoluteContinuityError(
            "Q is not absolutely continuous w.r.t. P "
            f"(Q-mass {f.singular_mass_q} sits where P vanishes)"
        )


def _require_mutual(f: SpectrumFunction) -> None:
    _require_pq_dominated(f)
    _require_qp_dominated(f)


def _log_segments(f: SpectrumFunction, extra_cuts: tuple[float, ...] = ()):
    """Segments (x_lo, x_hi, cdf value) between spectrum breakpoints, cut
    at 0 and at any extra log-abscissae."""
    pts = set(f.breakpoints)
    if f.breakpoints:
        lo, hi = f.breakpoints[0], f.breakpoints[-1]
        if lo < 0.0 < hi:
            pts.add(0.0)
        for c in extra_cuts:
            if lo < c < hi:
                pts.add(c)
    ordered = sorted(pts)
    return [
        (x0, x1, spectrum_eval(f, x0))
        for x0, x1 in zip(ordered, ordered[1:])
    ]


def g_segments(p: DiscreteDistribution, q: DiscreteDistribution) -> SegmentedIntegrand:
    """Exact segmentation of the spectral tail function of (P, Q)."""
    f = spectrum(p, q)
    _require_mutual(f)
    segs = []
    for x0, x1, c in _log_segments(f):
        gval = c if x1 <= 0.0 else 1.0 - c
        segs.append((math.exp(x0), math.exp(x1), gval))
    return SegmentedIntegrand(tuple(segs))


def represent_general(
    f: GeneratorFunction,
    p: DiscreteDistribution,
    q: DiscreteDistribution,
    c: float = 0.0,
) -> float:
    """Divergence as the inner product of the weight kernel with the
    spectral tail function.

    Works for any generator differentiable on (0, inf) and any shift
    constant c (the result is c-independent); requires mutual absolute
    continuity.  Kinked generators are routed to the named catalog.
    """
    if not f.is_smooth:
        raise KinkError(
            f"generator {f.family} has a kink; use represent_named instead"
        )
    seg = g_segments(p, q)
    pieces = []
    for blo, bhi, gval in seg.segments:
        if gval == 0.0:
            continue
        pieces.append(
            gval * integrate(lambda b: weight(f, b, c=c), blo, bhi, rel_tol=1e-10)
        )
    return math.fsum(pieces)


def represent_inverse_g(
    f: GeneratorFunction, p: DiscreteDistribution, q: DiscreteDistribution
) -> float:
    """Divergence via the two inverse branches of the g transform.

    Integrates 1 - F(l1(t)) and F(l2(t)) over t, inverting g numerically
    at every quadrature node.  Two nested numeric layers, so the accuracy
    contract is looser (~1e-6 relative) than the weight-kernel engine.
    Requires f strictly convex at 1.
    """
    if not f.is_smooth:
        raise KinkError("g inversion needs a differentiable, strictly convex f")
    spec = spectrum(p, q)
    _require_mutual(spec)
    if not spec.breakpoints:
        return 0.0
    x_min, x_max = spec.breakpoints[0], spec.breakpoints[-1]
    total = 0.0
    if x_max > 0.0:
        t_hi = g_eval(f, x_max)
        total += integrate(
            lambda t: 1.0 - spectrum_eval(spec, g_inverse(f, t, "positive")),
            0.0,
            t_hi,
            rel_tol=1e-9,
            max_intervals=4000,
        )
    if x_min < 0.0:
        t_hi = g_eval(f, x_min)
        total += integrate(
            lambda t: spectrum_eval(spec, g_inverse(f, t, "negative")),
            0.0,
            t_hi,
            rel_tol=1e-9,
            max_intervals=4000,
        )
    return total


# -- named catalog -----------------------------------------------------------


def _exact_piecewise(
    f: SpectrumFunction,
    anti: Callable[[float], float],
    use_tail: bool,
    lo: float = 0.0,
    hi: float = math.inf,
    extra_cuts: tuple[float, ...] = (),
    anti_at_inf: Optional[float] = None,
) -> float:
    """Integrate kernel * step over [lo, hi] with an exact antiderivative.

    ``use_tail`` False integrates kernel * F (zero below the lowest ratio),
    True integrates kernel * (1 - F) (zero above the highest ratio, and
    equal to the kernel below the lowest one).
    """

    def anti_at(b: float) -> float:
        if math.isinf(b):
            if anti_at_inf is None:
                raise ValueError("infinite limit without a tail antiderivative")
            return anti_at_inf
        return anti(b)

    log_cuts = tuple(math.log(c) for c in extra_cuts if c > 0.0)
    pieces = []
    if not f.breakpoints:
        return 0.0
    beta_first = math.exp(f.breakpoints[0])
    beta_last = math.exp(f.breakpoints[-1])
    # head: below the first breakpoint F = 0
    if use_tail and lo < beta_first:
        head_hi = min(beta_first, hi)
        if head_hi > lo:
            pieces.append(anti_at(head_hi) - anti_at(lo))
    # interior segments
    for x0, x1, cval in _log_segments(f, extra_cuts=log_cuts):
        b0, b1 = math.exp(x0), math.exp(x1)
        b0, b1 = max(b0, lo), min(b1, hi)
        if b1 <= b0:
            continue
        val = (1.0 - cval) if use_tail else cval
        if val != 0.0:
            pieces.append(val * (anti_at(b1) - anti_at(b0)))
    # tail: above the last breakpoint F = sup F (1 when P << Q)
    if not use_tail and hi > beta_last:
        sup_f = f.cum_masses[-1]
        if sup_f != 0.0:
            pieces.append(sup_f * (anti_at(hi) - anti_at(max(beta_last, lo))))
    return math.fsum(pieces)


def _quad_piecewise(
    f: SpectrumFunction,
    kernel: Callable[[float], float],
    use_tail: bool,
    lo: float = 0.0,
    hi: float = math.inf,
    tail_integral: Optional[float] = None,
) -> float:
    """Same contract as _exact_piecewise but with per-segment quadrature;
    an infinite upper limit needs the closed-form tail integral of the bare
    kernel over [beta_last, inf)."""
    pieces = []
    if not f.breakpoints:
        return 0.0
    beta_first = math.exp(f.breakpoints[0])
    beta_last = math.exp(f.breakpoints[-1])
    if use_tail and lo < beta_first:
        head_hi = min(beta_first, hi)
        if head_hi > lo:
            pieces.append(integrate(kernel, lo, head_hi, rel_tol=1e-10))
    for x0, x1, cval in _log_segments(f):
        b0, b1 = max(math.exp(x0), lo), min(math.exp(x1), hi)
        if b1 <= b0:
            continue
        val = (1.0 - cval) if use_tail else cval
        if val != 0.0:
            pieces.append(val * integrate(kernel, b0, b1, rel_tol=1e-10))
    if not use_tail and hi > beta_last:
        sup_f = f.cum_masses[-1]
        if sup_f != 0.0:
            if math.isinf(hi):
                if tail_integral is None:
                    raise ValueError("infinite limit without a tail integral")
                pieces.append(sup_f * tail_integral)
            else:
                pieces.append(
                    sup_f * integrate(kernel, max(beta_last, lo), hi, rel_tol=1e-10)
                )
    return math.fsum(pieces)


def _named_kl(f: SpectrumFunction) -> float:
    _require_mutual(f)
    up = _exact_piecewise(f, math.log, use_tail=True, lo=1.0)
    down = _exact_piecewise(f, math.log, use_tail=False, hi=1.0)
    return up - down


def _named_hellinger(f: SpectrumFunction, alpha: float) -> float:
    _require_mutual(f)
    am1 = alpha - 1.0
    anti = lambda b: b**am1 / am1
    if alpha > 1.0:
        # head integral of the bare kernel converges at 0 for alpha > 1
        return _exact_piecewise(f, anti, use_tail=True, anti_at_inf=None) - 1.0 / am1
    tail = 0.0  # anti tends to 0 at infinity for alpha < 1
    return 1.0 / (1.0 - alpha) - _exact_piecewise(f, anti, use_tail=False, anti_at_inf=tail)


def _named_chi2(f: SpectrumFunction) -> float:
    _require_mutual(f)
    return _exact_piecewise(f, lambda b: b, use_tail=True) - 1.0


def _named_sq_hellinger(f: SpectrumFunction) -> float:
    _require_mutual(f)
    integral = _exact_piecewise(
        f, lambda b: -2.0 / math.sqrt(b), use_tail=False, anti_at_inf=0.0
    )
    return 1.0 - 0.5 * integral


def _named_bhattacharyya(f: SpectrumFunction) -> float:
    _require_mutual(f)
    integral = _exact_piecewise(
        f, lambda b: -2.0 / math.sqrt(b), use_tail=False, anti_at_inf=0.0
    )
    return math.log(2.0) - math.log(integral)


def _named_renyi(f: SpectrumFunction, alpha: float) -> float:
    _require_mutual(f)
    am1 = alpha - 1.0
    anti = lambda b: b**am1 / am1
    if alpha > 1.0:
        integral = _exact_piecewise(f, anti, use_tail=True)
        return math.log(am1 * integral) / am1
    integral = _exact_piecewise(f, anti, use_tail=False, anti_at_inf=0.0)
    return math.log((1.0 - alpha) * integral) / am1


def _named_chi_s(f: SpectrumFunction, s: float) -> float:
    _require_mutual(f)
    # d/db [ (b-1)^s / b ] and d/db [ -(1-b)^s / b ] reproduce the kernel
    # (1/b)(s - 1 + 1/b)|b-1|^(s-1) on the two sides of 1.
    up = _exact_piecewise(f, lambda b: (b - 1.0) ** s / b, use_tail=True, lo=1.0)
    down = _exact_piecewise(f, lambda b: -((1.0 - b) ** s) / b, use_tail=False, hi=1.0)
    return up + down


def _named_tv(f: SpectrumFunction, form: str = "tail") -> float:
    _require_mutual(f)
    anti = lambda b: -1.0 / b
    if form == "tail":
        return 2.0 * _exact_piecewise(f, anti, use_tail=True, lo=1.0)
    if form == "head":
        return 2.0 * _exact_piecewise(f, anti, use_tail=False, hi=1.0)
    raise UnknownKindError(f"unknown TV form {form!r}")


def _named_degroot(f: SpectrumFunction, omega: float) -> float:
    anti = lambda b: -1.0 / b
    thr = (1.0 - omega) / omega
    if omega <= 0.5:
        _require_pq_dominated(f)
        return (1.0 - omega) * _exact_piecewise(
            f, anti, use_tail=True, lo=thr, anti_at_inf=0.0, extra_cuts=(thr,)
        )
    _require_qp_dominated(f)
    return (1.0 - omega) * _exact_piecewise(
        f, anti, use_tail=False, hi=thr, extra_cuts=(thr,)
    )


def _named_e_gamma(f: SpectrumFunction, gamma: float) -> float:
    _require_pq_dominated(f)
    anti = lambda b: -1.0 / b
    return gamma * _exact_piecewise(
        f, anti, use_tail=True, lo=gamma, anti_at_inf=0.0, extra_cuts=(gamma,)
    )


def _named_triangular(f: SpectrumFunction) -> float:
    _require_mutual(f)
    anti = lambda b: -1.0 / (b + 1.0)
    return 4.0 * _exact_piecewise(f, anti, use_tail=True, anti_at_inf=0.0) - 2.0


def _named_lin(f: SpectrumFunction, theta: float) -> float:
    _require_mutual(f)
    a = theta / (1.0 - theta)
    kernel = lambda b: math.log1p(a * b) / (b * b)
    # exact antiderivative used for the infinite tail where F == 1
    anti = lambda b: -math.log1p(a * b) / b + a * math.log(b / (1.0 + a * b))
    tail = -a * math.log(a) - anti(math.exp(f.breakpoints[-1])) if f.breakpoints else 0.0
    entropy = -theta * math.log(theta) - (1.0 - theta) * math.log(1.0 - theta)
    integral = _quad_piecewise(f, kernel, use_tail=False, tail_integral=tail)
    return entropy - (1.0 - theta) * integral


def _named_js(f: SpectrumFunction) -> float:
    return _named_lin(f, 0.5)


def _named_jeffreys(f: SpectrumFunction) -> float:
    _require_mutual(f)
    kernel = lambda b: 1.0 / b + math.log(b) / (b * b)
    up = _quad_piecewise(f, kernel, use_tail=True, lo=1.0)
    down = _quad_piecewise(f, kernel, use_tail=False, hi=1.0)
    return up - down


def represent_named(
    kind: str, p: DiscreteDistribution, q: DiscreteDistribution, **params: float
) -> float:
    """Evaluate the catalog integral representation of a named divergence.

    Mutual absolute continuity is required except where one-sided
    domination suffices (E_gamma and DeGroot with omega <= 1/2 need only
    P << Q; DeGroot with omega > 1/2 only Q << P).
    """
    f = spectrum(p, q)
    if kind == "kl":
        return _named_kl(f)
    if kind == "hellinger":
        return _named_hellinger(f, params["alpha"])
    if kind == "chi2":
        return _named_chi2(f)
    if kind == "sq_hellinger":
        return _named_sq_hellinger(f)
    if kind == "bhattacharyya":
        return _named_bhattacharyya(f)
    if kind == "renyi":
        return _named_renyi(f, params["alpha"])
    if kind == "chi_s":
        return _named_chi_s(f, params["s"])
    if kind == "tv":
        return _named_tv(f, params.get("form", "tail"))  # type: ignore[arg-type]
    if kind == "degroot":
        return _named_degroot(f, params["omega"])
    if kind == "e_gamma":
        return _named_e_gamma(f, params["gamma"])
    if kind == "triangular":
        return _named_triangular(f)
    if kind == "lin":
        return _named_lin(f, params["theta"])
    if kind == "js":
        return _named_js(f)
    if kind == "jeffreys":
        return _named_jeffreys(f)
    raise UnknownKindError(f"no integral representation for kind {kind!r}")


def spectrum_identity(p: DiscreteDistribution, q: DiscreteDistribution) -> float:
    """The exact integral of F(ln beta)/beta^2 over (0, inf).

    The integral equals the expectation of the inverse likelihood ratio
    under P, i.e. the Q-mass of P's support, so it is 1 exactly when
    Q << P (P may still put mass where Q vanishes).
    """
    f = spectrum(p, q)
    _require_qp_dominated(f)
    return _exact_piecewise(f, lambda b: -1.0 / b, use_tail=False, anti_at_inf=0.0)


def spectrum_from_egamma(
    p: DiscreteDistribution, q: DiscreteDistribution, x: float
) -> float:
    """Reconstruct the spectrum CDF at x from the E_gamma curve.

    Uses the exact right-derivative of gamma -> E_gamma; this reproduces
    the right-continuous CDF for x >= 0 and the left limit at atoms for
    x < 0 (so it matches spectrum_eval at every continuity point).
    """
    f = spectrum(p, q)
    _require_mutual(f)
    if x >= 0.0:
        gamma = math.exp(x)
        e_val = math.fsum(
            pm - gamma * qm for pm, qm in zip(p.masses, q.masses) if pm > gamma * qm
        )
        slope = -math.fsum(
            qm for pm, qm in zip(p.masses, q.masses) if pm > gamma * qm
        )
        return 1.0 - e_val + (gamma * slope if slope != 0.0 else 0.0)
    gamma = math.exp(-x)
    # -E'_gamma(Q||P) with the swapped-pair right-derivative
    return math.fsum(
        pm for pm, qm in zip(p.masses, q.masses) if qm > gamma * pm
    )


def _degroot_right_derivative(
    p: DiscreteDistribution, q: DiscreteDistribution, omega: float
) -> float:
    prior_part = 1.0 if omega < 0.5 else -1.0
    posterior_part = math.fsum(
        pm if omega * pm < (1.0 - omega) * qm else -qm
        for pm, qm in zip(p.masses, q.masses)
    )
    return prior_part - posterior_part


def spectrum_from_degroot(
    p: DiscreteDistribution, q: DiscreteDistribution, x: float
) -> float:
    """Reconstruct the spectrum CDF at x from the DeGroot information
    curve, solving omega from x = ln((1-omega)/omega).

    Same one-sided-derivative convention as spectrum_from_egamma.
    """
    f = spectrum(p, q)
    _require_mutual(f)
    if abs(x) > 700.0:
        raise DomainError("prior solved from x underflows past |x| ~ 700")
    # overflow-safe solve of x = ln((1-omega)/omega)
    if x >= 0.0:
        emx = math.exp(-x)
        omega = emx / (1.0 + emx)
    else:
        omega = 1.0 / (1.0 + math.exp(x))
    i_val = float(divergence("degroot", p, q, omega=omega))
    i_slope = _degroot_right_derivative(p, q, omega)
    if x > 0.0:
        return 1.0 - i_val - (1.0 - omega) * i_slope
    return -i_val - (1.0 - omega) * i_slope


def represent_degroot_weight(
    f: GeneratorFunction, p: DiscreteDistribution, q: DiscreteDistribution
) -> float:
    """Divergence as a DeGroot-information-weighted integral over priors.

    Valid for twice-differentiable generators: integrates
    I_omega(P||Q) f''((1-omega)/omega) / omega^3 over omega in (0, 1).
    (With the prior-on-P convention used here, the second derivative is
    evaluated at the likelihood-ratio threshold (1-omega)/omega; this is
    the form that reproduces the direct divergence.)  On finite alphabets
    the integrand has compact support; it is split at the prior images of
    the likelihood-ratio atoms (and at 1/2).
    """
    if f._second is None:
        raise CapabilityError(
            f"generator {f.family} supplies no second derivative"
        )
    spec = spectrum(p, q)
    _require_mutual(spec)
    if not spec.breakpoints:
        return 0.0
    betas = [math.exp(x) for x in spec.breakpoints]
    lo = 1.0 / (1.0 + betas[-1])
    hi = 1.0 / (1.0 + betas[0])
    if lo >= hi:
        return 0.0
    cuts = sorted({lo, hi, 0.5, *(1.0 / (1.0 + b) for b in betas)})
    cuts = [c for c in cuts if lo <= c <= hi]

    def integrand(omega: float) -> float:
        i_val = float(divergence("degroot", p, q, omega=omega))
        t = (1.0 - omega) / omega
        return i_val * f.second(t) / omega**3

    pieces = [
        integrate(integrand, c0, c1, rel_tol=1e-10)
        for c0, c1 in zip(cuts, cuts[1:])
    ]
    return math.fsum(pieces)
