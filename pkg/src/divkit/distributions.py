"""Finite discrete probability distributions and the relative information spectrum.

Conventions used throughout the package:

* natural logarithms everywhere -- every information quantity is in nats;
* the relative information at an atom is ``ln p - ln q`` so that swapping
  the pair negates it exactly in floating point;
* atoms whose log-ratios compare bit-equal are merged into one spectrum
  breakpoint; no epsilon merging is applied beyond that.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, UndefinedAtomError, ValidationError

__all__ = [
    "DiscreteDistribution",
    "SpectrumFunction",
    "make_distribution",
    "relative_information",
    "spectrum",
    "spectrum_eval",
    "g_big",
    "mixture",
]

_NORMALIZATION_TOL = 1e-12


@dataclass(frozen=True)
class DiscreteDistribution:
    """Probability mass function over an indexed finite alphabet.

    Masses are non-negative, sum to one (within normalization tolerance)
    and at least one is strictly positive.  Instances are immutable; all
    operations on them are pure functions.
    """

    masses: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.masses:
            raise ValidationError("distribution needs at least one atom")
        for m in self.masses:
            if not math.isfinite(m) or m < 0.0:
                raise ValidationError(f"invalid mass {m!r}")
        total = math.fsum(self.masses)
        if total <= 0.0:
            raise ValidationError("at least one mass must be strictly positive")
        if abs(total - 1.0) > _NORMALIZATION_TOL:
            raise ValidationError(
                f"masses sum to {total!r}, outside normalization tolerance"
            )

    def __len__(self) -> int:
        return len(self.masses)

    def __getitem__(self, i: int) -> float:
        return self.masses[i]


@dataclass(frozen=True)
class SpectrumFunction:
    """The relative information spectrum as an exact right-continuous step
    function.

    ``breakpoints`` are the distinct finite values of ``ln(p/q)`` over atoms
    carrying mass under both measures, sorted increasingly; ``cum_masses[j]``
    is the value of the CDF on ``[breakpoints[j], breakpoints[j+1])``.
    ``singular_mass_p`` is the P-mass where q vanishes (pushed to +inf in
    log-ratio), ``singular_mass_q`` the Q-mass where p vanishes.
    """

    breakpoints: tuple[float, ...]
    cum_masses: tuple[float, ...]
    singular_mass_p: float
    singular_mass_q: float

    @property
    def mutually_absolutely_continuous(self) -> bool:
        return self.singular_mass_p == 0.0 and self.singular_mass_q == 0.0


def make_distribution(weights: Sequence[float]) -> DiscreteDistribution:
    """Normalize non-negative weights into a DiscreteDistribution.

    Atom order is preserved.  Raises ValidationError on negative,
    non-finite, or all-zero weights.
    """
    ws = [float(w) for w in weights]
    if not ws:
        raise ValidationError("empty weight sequence")
    for w in ws:
        if not math.isfinite(w):
            raise ValidationError(f"non-finite weight {w!r}")
        if w < 0.0:
            raise ValidationError(f"negative weight {w!r}")
    total = math.fsum(ws)
    if total <= 0.0:
        raise ValidationError("weights sum to zero")
    return DiscreteDistribution(tuple(w / total for w in ws))


def _require_shared_alphabet(p: DiscreteDistribution, q: DiscreteDistribution) -> None:
    if len(p) != len(q):
        raise ValidationError(
            f"distributions live on different alphabets ({len(p)} vs {len(q)} atoms)"
        )


def relative_information(
    p: DiscreteDistribution, q: DiscreteDistribution, atom: int
) -> float:
    """Log-likelihood ratio ln(p/q) at one atom, in nats.

    Returns +inf when q vanishes under positive p, -inf in the mirrored
    case.  Computed as ``ln p - ln q`` so the swap antisymmetry holds
    exactly.  An atom with p == q == 0 carries no information and raises
    UndefinedAtomError.
    """
    _require_shared_alphabet(p, q)
    pm, qm = p[atom], q[atom]
    if pm == 0.0 and qm == 0.0:
        raise UndefinedAtomError(f"atom {atom} has zero mass under both measures")
    if pm == 0.0:
        return -math.inf
    if qm == 0.0:
        return math.inf
    return math.log(pm) - math.log(qm)


def spectrum(p: DiscreteDistribution, q: DiscreteDistribution) -> SpectrumFunction:
    """Build the relative information spectrum of (P, Q).

    Atoms with mass under both measures contribute a breakpoint at their
    log-ratio, ties merged by summing P-mass; singular atoms are recorded
    in the two singular-mass fields; p == q == 0 atoms are dropped.
    """
    _require_shared_alphabet(p, q)
    groups: dict[float, list[float]] = {}
    sing_p: list[float] = []
    sing_q: list[float] = []
    for pm, qm in zip(p.masses, q.masses):
        if pm > 0.0 and qm > 0.0:
            x = math.log(pm) - math.log(qm)
            groups.setdefault(x, []).append(pm)
        elif pm > 0.0:
            sing_p.append(pm)
        elif qm > 0.0:
            sing_q.append(qm)
    breakpoints = tuple(sorted(groups))
    cums: list[float] = []
    seen: list[float] = []
    for x in breakpoints:
        seen.extend(groups[x])
        cums.append(math.fsum(seen))
    return SpectrumFunction(
        breakpoints=breakpoints,
        cum_masses=tuple(cums),
        singular_mass_p=math.fsum(sing_p),
        singular_mass_q=math.fsum(sing_q),
    )


def spectrum_eval(f: SpectrumFunction, x: float) -> float:
    """Right-continuous evaluation of the spectrum CDF at x."""
    if math.isnan(x):
        raise DomainError("x must not be NaN")
    j = bisect_right(f.breakpoints, x)
    if j == 0:
        return 0.0
    return f.cum_masses[j - 1]


def g_big(p: DiscreteDistribution, q: DiscreteDistribution, beta: float) -> float:
    """Tail function of the likelihood ratio under P.

    For beta >= 1 this is P[dP/dQ > beta] = 1 - F(ln beta); for beta in
    (0,1) it is F(ln beta).  Identically zero when P == Q.
    """
    if not (beta > 0.0) or math.isinf(beta):
        raise DomainError("beta must be a finite positive real")
    return _g_from_spectrum(spectrum(p, q), beta)


def _g_from_spectrum(f: SpectrumFunction, beta: float) -> float:
    x = math.log(beta)
    if beta >= 1.0:
        return 1.0 - spectrum_eval(f, x)
    return spectrum_eval(f, x)


def mixture(
    p: DiscreteDistribution, q: DiscreteDistribution, lam: float
) -> DiscreteDistribution:
    """Atomwise convex combination lam*P + (1-lam)*Q."""
    _require_shared_alphabet(p, q)
    if not 0.0 <= lam <= 1.0:
        raise DomainError(f"mixture weight {lam!r} outside [0, 1]")
    return DiscreteDistribution(
        tuple(lam * pm + (1.0 - lam) * qm for pm, qm in zip(p.masses, q.masses))
    )
