"""Fiber-preserving coverings over the identity of the base orbifold.

A covering ``M -> N`` of fiber degree ``d`` that induces the identity on
the common base takes the invariant ``(b; (a_i, b_i))`` of ``M`` to
``(d*b; (a_i, d*b_i))`` for ``N``, so Euler numbers scale by ``d``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Tuple, Union

from .errors import DegreeConeClash, NonHyperbolicBase, NonOrientableBase, OrientableBase, SeifertError
from .invariants import (
    Fiber,
    Orbifold,
    SeifertInvariant,
    classify_geometry,
    euler_number,
    is_hyperbolic,
    normalize,
    unit_tangent_bundle,
)


class Orientation(str, enum.Enum):
    PRESERVING = "preserving"
    REVERSING = "reversing"

    @property
    def sign(self) -> int:
        return 1 if self is Orientation.PRESERVING else -1


@dataclass(frozen=True)
class Covers:
    degree: int
    orientation: Orientation

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"covering degree must be >= 1, got {self.degree}")


@dataclass(frozen=True)
class DegreeAttempt:
    """Outcome of testing the unique candidate degree for one orientation.

    ``ratio`` is the Euler-number ratio that forces the degree; ``degree``
    is set only when that ratio is a positive integer.  ``failed_fibers``
    lists the fibers violating ``d * beta = sign (mod alpha)``.
    """

    orientation: Orientation
    ratio: Fraction
    degree: Optional[int]
    failed_fibers: Tuple[Fiber, ...] = ()
    failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failure is None


@dataclass(frozen=True)
class DoesNotCover:
    reason: str
    attempts: Tuple[DegreeAttempt, ...] = ()


CoveringVerdict = Union[Covers, DoesNotCover]


def hurwitz_euler(degree: int, eu_cover) -> Fraction:
    """Euler number downstairs of a degree-``degree`` fiberwise covering."""
    if degree < 1:
        raise SeifertError(f"degree must be >= 1, got {degree}")
    return degree * Fraction(eu_cover)


def fiberwise_pushforward(mhat: SeifertInvariant, degree: int) -> SeifertInvariant:
    if degree < 1:
        raise SeifertError(f"degree must be >= 1, got {degree}")
    for a, _ in mhat.fibers:
        if gcd(degree, a) != 1:
            raise DegreeConeClash(f"degree {degree} shares a factor with cone order {a}")
    pushed = tuple((a, degree * beta) for a, beta in mhat.fibers)
    return normalize(SeifertInvariant(mhat.base, degree * mhat.b, pushed))


def _require_oriented_hyperbolic(base: Orbifold) -> None:
    if not base.orientable:
        raise NonOrientableBase(f"base {base} is not orientable")
    if not is_hyperbolic(base):
        raise NonHyperbolicBase(f"base {base} is {classify_geometry(base).value}")


def _attempt(m: SeifertInvariant, ratio: Fraction, orientation: Orientation) -> DegreeAttempt:
    if ratio.denominator != 1 or ratio <= 0:
        return DegreeAttempt(
            orientation, ratio, None, failure=f"Euler ratio {ratio} is not a positive integer"
        )
    d = ratio.numerator
    clash = tuple(f for f in m.fibers if gcd(d, f[0]) != 1)
    if clash:
        return DegreeAttempt(
            orientation, ratio, d, clash,
            failure=f"degree d={d} shares a factor with cone orders at {_fmt(clash)}",
        )
    s = orientation.sign
    bad = tuple((a, beta) for a, beta in m.fibers if (d * beta - s) % a != 0)
    if bad:
        rhs = "1" if s == 1 else "-1"
        return DegreeAttempt(
            orientation, ratio, d, bad,
            failure=f"d={d} but congruence d·βᵢ ≡ {rhs} mod αᵢ fails at {_fmt(bad)}",
        )
    return DegreeAttempt(orientation, ratio, d)


def _fmt(fibers) -> str:
    return ",".join(f"({a},{beta})" for a, beta in fibers)


def covers_unit_tangent_bundle(m: SeifertInvariant) -> CoveringVerdict:
    """Decide whether ``m`` covers the unit tangent bundle of its base fiberwise.

    Only coverings inducing the identity on the base are considered.  For
    each orientation the degree is forced by the Euler-number ratio, so
    no search is needed; the congruences then settle the exceptional
    fibers.
    """
    _require_oriented_hyperbolic(m.base)
    m = normalize(m)
    e = euler_number(m)
    t = euler_number(unit_tangent_bundle(m.base))
    if e == 0:
        return DoesNotCover("Euler number zero; target has nonzero Euler number")
    attempts = tuple(
        _attempt(m, orientation.sign * t / e, orientation) for orientation in Orientation
    )
    for attempt in attempts:
        if attempt.ok:
            return Covers(attempt.degree, attempt.orientation)
    reason = "; ".join(f"{a.orientation.value}: {a.failure}" for a in attempts)
    return DoesNotCover(reason, attempts)


def orientation_double_cover(m: SeifertInvariant) -> SeifertInvariant:
    """Pull ``m`` back to the orientable double cover of its base.

    Each exceptional fiber has two preimages and ``b`` doubles, which
    doubles the Euler number.
    """
    base = m.base
    if base.orientable:
        raise OrientableBase(f"base {base} is already orientable")
    m = normalize(m)
    cover = Orbifold(True, base.genus - 1, base.cone_orders * 2)
    return normalize(SeifertInvariant(cover, 2 * m.b, m.fibers * 2))
