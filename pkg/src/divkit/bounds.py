"""The inequality catalog: E_gamma / DeGroot lower bounds on general
f-divergences, closed-form upper bounds on E_gamma and DeGroot information,
the Pinsker / Bretagnolle-Huber / Vajda frontier, and the Lambert-W
machinery behind the straight-line constant.

All bound functions are pure scalar maps, so they compose with divergence
values computed elsewhere (or supplied externally).  KL and Renyi
quantities are in nats throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, RootError, ValidationError
from .generators import GeneratorFunction, conjugate

__all__ = [
    "BoundReport",
    "LambertBranchValue",
    "lambert_w",
    "c_gamma",
    "straight_line_egamma_ub",
    "fdiv_lower_via_egamma",
    "fdiv_lower_via_degroot",
    "egamma_upper",
    "hellinger_renyi_lower",
    "tv_kl_frontier",
    "degroot_upper",
    "chi2_lower_from_tv",
    "kl_upper_log_chi2",
    "crossover_d",
    "pinsker_bh_switch",
    "make_report",
]

_BRANCH_POINT = -math.exp(-1.0)


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one certified inequality.

    ``slack`` is certified - bound for lower bounds and bound - certified
    for upper bounds, so a satisfied inequality has non-negative slack.
    """

    name: str
    bound_value: float
    certified_quantity: Optional[float]
    direction: str
    slack: Optional[float]


def make_report(
    name: str, bound_value: float, certified_quantity: Optional[float], direction: str
) -> BoundReport:
    if direction not in ("lower", "upper"):
        raise DomainError(f"direction must be 'lower' or 'upper', got {direction!r}")
    slack: Optional[float] = None
    if certified_quantity is not None:
        if direction == "lower":
            slack = certified_quantity - bound_value
        else:
            slack = bound_value - certified_quantity
        if math.isnan(slack):  # inf vs inf comparisons
            slack = 0.0
    return BoundReport(name, bound_value, certified_quantity, direction, slack)


@dataclass(frozen=True)
class LambertBranchValue:
    branch: str
    w: float

    def __float__(self) -> float:
        return self.w


def _halley(x: float, w0: float) -> float:
    w = w0
    for _ in range(100):
        ew = math.exp(w)
        err = w * ew - x
        wp1 = w + 1.0
        if wp1 == 0.0:
            break  # landed on the branch point
        denom = ew * wp1 - (w + 2.0) * err / (2.0 * wp1)
        dw = err / denom
        w -= dw
        if abs(dw) <= 1e-15 * (1.0 + abs(w)):
            break
    return w


def lambert_w(branch: str, x: float) -> LambertBranchValue:
    """Real Lambert W: solve w e^w = x on the requested branch.

    principal: x >= -1/e, w >= -1;  secondary: -1/e <= x < 0, w <= -1.
    Halley iteration from a branch-appropriate seed; round-trip accurate
    to ~1e-15 relative away from the branch point.
    """
    if math.isnan(x):
        raise DomainError("NaN argument")
    if branch == "principal":
        if x < _BRANCH_POINT:
            raise DomainError(f"x={x!r} below the branch point -1/e")
        if x == _BRANCH_POINT:
            return LambertBranchValue(branch, -1.0)
        if x == 0.0:
            return LambertBranchValue(branch, 0.0)
        delta = 1.0 + math.e * x
        if delta < 5e-13:
            # series around the branch point; Halley stalls at w = -1
            return LambertBranchValue(branch, -1.0 + math.sqrt(2.0 * delta))
        if x <= -0.27:
            w0 = -1.0 + math.sqrt(2.0 * delta)
        elif x <= math.e:
            w0 = math.log1p(x) if x > -0.9 else x
        else:
            lx = math.log(x)
            w0 = lx - math.log(lx)
        return LambertBranchValue(branch, _halley(x, w0))
    if branch == "secondary":
        if x < _BRANCH_POINT or x >= 0.0:
            raise DomainError(f"x={x!r} outside [-1/e, 0) for the secondary branch")
        if x == _BRANCH_POINT:
            return LambertBranchValue(branch, -1.0)
        delta = 1.0 + math.e * x
        if delta < 5e-13:
            return LambertBranchValue(branch, -1.0 - math.sqrt(2.0 * delta))
        if x >= -0.27:
            lx = math.log(-x)
            w0 = lx - math.log(-lx)
        else:
            w0 = -1.0 - math.sqrt(2.0 * delta)
        return LambertBranchValue(branch, _halley(x, w0))
    raise DomainError(f"unknown branch {branch!r}")


def c_gamma(gamma: float) -> float:
    """Tightest constant c with E_gamma <= c * KL, for gamma > 1 (nats).

    Obtained from the secondary Lambert branch:
    t = -gamma W_{-1}(-(1/gamma) e^(-1/gamma)), c = (t - gamma) /
    (t ln t + 1 - t).
    """
    if gamma <= 1.0:
        raise DomainError("c_gamma defined for gamma > 1")
    z = -math.exp(-1.0 / gamma) / gamma
    t = -gamma * lambert_w("secondary", z).w
    return (t - gamma) / (t * math.log(t) + 1.0 - t)


def straight_line_egamma_ub(gamma: float, d: float) -> float:
    """Straight-line bound E_gamma <= c_gamma * KL (nats), gamma > 1."""
    if d < 0.0:
        raise DomainError("relative entropy must be non-negative")
    return c_gamma(gamma) * d


def _conj_eval(fc: GeneratorFunction, t: float) -> float:
    return fc.f_at_zero if t == 0.0 else fc._eval(t)


def fdiv_lower_via_egamma(f: GeneratorFunction, e_val: float, gamma: float) -> float:
    """Jensen lower bound on D_f(P||Q) from one E_gamma value.

    f*(1 + E/g) + f*((1 - E)/g) - f*(1/g), valid for every pair with
    E_gamma(P||Q) = e_val.  Tight for f = total variation at gamma = 1.
    """
    if not 0.0 <= e_val < 1.0:
        raise DomainError("E_gamma value must lie in [0, 1)")
    if gamma < 1.0:
        raise DomainError("gamma must be >= 1")
    fc = conjugate(f)
    return (
        _conj_eval(fc, 1.0 + e_val / gamma)
        + _conj_eval(fc, (1.0 - e_val) / gamma)
        - _conj_eval(fc, 1.0 / gamma)
    )


def fdiv_lower_via_degroot(f: GeneratorFunction, omega: float, i_val: float) -> float:
    """Lower bound on D_f(P||Q) from one DeGroot information value.

    For omega <= 1/2 pass I_omega(P||Q); for omega > 1/2 pass I_omega(Q||P)
    (the bound then flows through the swapped E_gamma scaling).
    """
    if not 0.0 < omega < 1.0:
        raise DomainError("omega must lie in (0, 1)")
    if -1e-12 <= i_val < 0.0:
        i_val = 0.0  # tolerate rounding in computed DeGroot values
    if not 0.0 <= i_val <= min(omega, 1.0 - omega):
        raise DomainError(
            f"DeGroot value {i_val!r} outside [0, min(omega, 1-omega)]"
        )
    fc = conjugate(f)
    if omega <= 0.5:
        comp = 1.0 - omega
        return (
            _conj_eval(fc, 1.0 + i_val / comp)
            + _conj_eval(fc, (omega - i_val) / comp)
            - _conj_eval(fc, omega / comp)
        )
    return (
        _conj_eval(fc, 1.0 + i_val / omega)
        + _conj_eval(fc, (1.0 - omega - i_val) / omega)
        - _conj_eval(fc, (1.0 - omega) / omega)
    )


def egamma_upper(kind: str, gamma: float, value: float) -> float:
    """Closed-form upper bounds on E_gamma from chi^2 or KL (nats).

    kind="chi2":  (1/2)[1 - g + sqrt((g-1)^2 + 4 g x / (1 + g + x))];
    kind="kl":    (1/2)[1 - g + sqrt((g-1)^2 + 4 g (1 - e^(-D)))].
    At gamma = 1 the KL form is the Bretagnolle-Huber bound on E_1.
    """
    if gamma < 1.0:
        raise DomainError("gamma must be >= 1")
    if value < 0.0:
        raise DomainError("divergence input must be non-negative")
    if kind == "chi2":
        inner = 1.0 if math.isinf(value) else value / (1.0 + gamma + value)
        term = 4.0 * gamma * inner
    elif kind == "kl":
        term = 4.0 * gamma * (1.0 - math.exp(-value))
    else:
        raise DomainError(f"unknown egamma_upper kind {kind!r}")
    return 0.5 * (1.0 - gamma + math.sqrt((gamma - 1.0) ** 2 + term))


def hellinger_renyi_lower(kind: str, alpha: float, gamma: float, e_val: float) -> float:
    """Lower bounds on the Hellinger or Renyi divergence of order alpha
    from one E_gamma value (alpha = 1 is the logarithmic branch; nats)."""
    if alpha <= 0.0:
        raise DomainError("order must be positive")
    if gamma < 1.0:
        raise DomainError("gamma must be >= 1")
    if not 0.0 <= e_val < 1.0:
        raise DomainError("E_gamma value must lie in [0, 1)")
    up = 1.0 + e_val / gamma
    down = 1.0 - e_val
    if alpha == 1.0:
        val = -math.log(up * down)
        if kind in ("hellinger", "renyi"):
            return val
        raise DomainError(f"unknown kind {kind!r}")
    oma = 1.0 - alpha
    if kind == "hellinger":
        return (
            up**oma + (down / gamma) ** oma - 1.0 - gamma ** (alpha - 1.0)
        ) / (alpha - 1.0)
    if kind == "renyi":
        inner = up**oma + gamma ** (alpha - 1.0) * (down**oma - 1.0)
        return math.log(inner) / (alpha - 1.0)
    raise DomainError(f"unknown kind {kind!r}")


def tv_kl_frontier(kind: str, value: float) -> float:
    """Classical total-variation / relative-entropy frontier (nats).

    Lower bounds on KL from TV: pinsker_lb_kl, bh_lb_kl, vajda_lb_kl.
    Upper bounds on TV from KL: bh_ub_tv, vajda_ub_tv (principal Lambert
    branch).
    """
    if kind in ("pinsker_lb_kl", "bh_lb_kl", "vajda_lb_kl"):
        tv = value
        if not 0.0 <= tv < 2.0:
            raise DomainError("total variation must lie in [0, 2)")
        if kind == "pinsker_lb_kl":
            return 0.5 * tv * tv
        if kind == "bh_lb_kl":
            return -math.log1p(-0.25 * tv * tv)
        return math.log((2.0 + tv) / (2.0 - tv)) - 2.0 * tv / (2.0 + tv)
    if kind in ("bh_ub_tv", "vajda_ub_tv"):
        d = value
        if d < 0.0:
            raise DomainError("relative entropy must be non-negative")
        if kind == "bh_ub_tv":
            return 2.0 * math.sqrt(-math.expm1(-d))
        z = -math.exp(-1.0 - d)
        w = lambert_w("principal", z).w
        return 2.0 * (1.0 + w) / (1.0 - w)
    raise DomainError(f"unknown frontier kind {kind!r}")


def degroot_upper(
    kind: str,
    omega: float,
    d_pq: Optional[float] = None,
    d_qp: Optional[float] = None,
    chi_pq: Optional[float] = None,
    chi_qp: Optional[float] = None,
) -> float:
    """Closed-form upper bounds on the DeGroot information I_omega(P||Q).

    kind="chi2" uses chi^2 (P||Q for omega <= 1/2, Q||P above);
    kind="kl_line" is the straight-line bound omega c_{(1-omega)/omega} D
    with the Pinsker form sqrt(min(D_pq, D_qp)/8) at omega = 1/2;
    kind="kl_bh" is the Bretagnolle-Huber-style form.  All bounds approach
    min(omega, 1-omega) as the divergences grow.
    """
    if not 0.0 < omega < 1.0:
        raise DomainError("omega must lie in (0, 1)")

    def _need(val: Optional[float], name: str) -> float:
        if val is None:
            raise ValidationError(f"{kind} with omega={omega} needs {name}")
        if val < 0.0:
            raise DomainError(f"{name} must be non-negative")
        return val

    if kind == "chi2":
        # derived from the E_gamma chi^2 bound through the prior scaling;
        # symmetric under (omega, P, Q) -> (1-omega, Q, P)
        if omega <= 0.5:
            chi = _need(chi_pq, "chi_pq")
            ratio = 0.0 if math.isinf(chi) else omega * (1.0 - omega) / (1.0 + omega * chi)
            return omega - 0.5 + math.sqrt(0.25 - ratio)
        chi = _need(chi_qp, "chi_qp")
        ratio = (
            0.0
            if math.isinf(chi)
            else omega * (1.0 - omega) / (1.0 + (1.0 - omega) * chi)
        )
        return 0.5 - omega + math.sqrt(0.25 - ratio)
    if kind == "kl_line":
        if omega < 0.5:
            return omega * c_gamma((1.0 - omega) / omega) * _need(d_pq, "d_pq")
        if omega > 0.5:
            return (1.0 - omega) * c_gamma(omega / (1.0 - omega)) * _need(d_qp, "d_qp")
        return math.sqrt(min(_need(d_pq, "d_pq"), _need(d_qp, "d_qp")) / 8.0)
    if kind == "kl_bh":
        if omega <= 0.5:
            d = _need(d_pq, "d_pq")
        else:
            d = _need(d_qp, "d_qp")
        return (
            min(omega, 1.0 - omega)
            - 0.5
            + math.sqrt(0.25 - omega * (1.0 - omega) * math.exp(-d))
        )
    raise DomainError(f"unknown degroot_upper kind {kind!r}")


def chi2_lower_from_tv(kind: str, tv: float) -> float:
    """Lower bounds on chi^2 from total variation.

    kind="tight" is the two-branch optimal curve; kind="jensen" the single
    closed form 2 tv^2 / (4 - tv^2), at most a factor 2 (resp. 3/2) below
    the tight curve on tv < 1 (resp. tv >= 1).
    """
    if not 0.0 <= tv < 2.0:
        raise DomainError("total variation must lie in [0, 2)")
    if kind == "tight":
        if tv < 1.0:
            return tv * tv
        return tv / (2.0 - tv)
    if kind == "jensen":
        return 2.0 * tv * tv / (4.0 - tv * tv)
    raise DomainError(f"unknown chi2_lower_from_tv kind {kind!r}")


def kl_upper_log_chi2(chi2: float) -> float:
    """KL <= ln(1 + chi^2), in nats."""
    if chi2 < 0.0:
        raise DomainError("chi^2 must be non-negative")
    return math.log1p(chi2)


def _bisect(h, lo: float, hi: float, tol: float, iters: int = 200) -> float:
    h_lo = h(lo)
    h_hi = h(hi)
    if h_lo == 0.0:
        return lo
    if h_hi == 0.0:
        return hi
    if (h_lo > 0.0) == (h_hi > 0.0):
        raise RootError(f"no sign change on [{lo}, {hi}]")
    for _ in range(iters):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if (h(mid) > 0.0) == (h_lo > 0.0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def crossover_d(gamma: float) -> float:
    """Relative entropy (nats) where the straight-line E_gamma bound stops
    being tighter than the Bretagnolle-Huber-style curve, for gamma > 1."""
    if gamma <= 1.0:
        raise DomainError("crossover defined for gamma > 1")
    c = c_gamma(gamma)

    def h(d: float) -> float:
        return c * d - egamma_upper("kl", gamma, d)

    return _bisect(h, 1e-6, 50.0, tol=1e-9)


def pinsker_bh_switch() -> float:
    """Relative entropy (nats) where the Pinsker and Bretagnolle-Huber
    upper bounds on total variation cross: the root of 2(1 - e^(-D)) = D."""

    def h(d: float) -> float:
        return 2.0 * (-math.expm1(-d)) - d

    return _bisect(h, 0.5, 3.0, tol=1e-12)
