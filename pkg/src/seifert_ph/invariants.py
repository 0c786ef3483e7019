"""Closed 2-orbifolds, Seifert invariants and their exact Euler-number arithmetic.

Conventions
-----------
A Seifert invariant is ``(base; b; (a_1, b_1), ..., (a_n, b_n))`` and its
Euler number is ``e = -(b + sum(b_i / a_i))``.  With this sign the unit
tangent bundle of a hyperbolic orbifold has ``e = -chi_orb > 0``.

Reversing the orientation of the total space negates ``b`` and every
``b_i``.  Normal form has ``0 <= b_i < a_i`` with the fibers sorted.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Tuple

from .errors import (
    GcdViolation,
    InvalidInvariant,
    InvalidOrbifold,
    NonHyperbolicBase,
    NonOrientableBase,
)

Fiber = Tuple[int, int]


@dataclass(frozen=True)
class Orbifold:
    """Closed 2-orbifold with cone points only.

    ``genus`` is the orientable genus, or the number of cross-caps when
    ``orientable`` is false.  ``cone_orders`` is kept sorted so that two
    orbifolds with the same multiset of cone orders compare equal.
    """

    orientable: bool
    genus: int
    cone_orders: Tuple[int, ...] = ()

    def __post_init__(self):
        orders = tuple(sorted(int(a) for a in self.cone_orders))
        object.__setattr__(self, "cone_orders", orders)
        if self.genus < 0:
            raise InvalidOrbifold(f"genus must be non-negative, got {self.genus}")
        if not self.orientable and self.genus < 1:
            raise InvalidOrbifold("a non-orientable surface needs at least one cross-cap")
        for a in orders:
            if a < 2:
                raise InvalidOrbifold(f"cone order must be >= 2, got {a}")

    @classmethod
    def sphere(cls, *cone_orders: int) -> "Orbifold":
        return cls(True, 0, tuple(cone_orders))

    def __str__(self):
        kind = "" if self.orientable else "n"
        cones = ",".join(map(str, self.cone_orders))
        return f"O(g={kind}{self.genus}; {cones})"


class GeometryClass(enum.Enum):
    BAD = "bad"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


def surface_euler_characteristic(o: Orbifold) -> int:
    """Euler characteristic of the underlying topological surface."""
    return 2 - 2 * o.genus if o.orientable else 2 - o.genus


def orbifold_euler_characteristic(o: Orbifold) -> Fraction:
    chi = Fraction(surface_euler_characteristic(o))
    for a in o.cone_orders:
        chi -= 1 - Fraction(1, a)
    return chi


def _is_bad(o: Orbifold) -> bool:
    # teardrop S^2(p) and spindle S^2(p, q) with p != q
    if not o.orientable or o.genus != 0:
        return False
    cones = o.cone_orders
    return len(cones) == 1 or (len(cones) == 2 and cones[0] != cones[1])


def classify_geometry(o: Orbifold) -> GeometryClass:
    if _is_bad(o):
        return GeometryClass.BAD
    chi = orbifold_euler_characteristic(o)
    if chi < 0:
        return GeometryClass.HYPERBOLIC
    if chi == 0:
        return GeometryClass.PARABOLIC
    return GeometryClass.ELLIPTIC


def is_hyperbolic(o: Orbifold) -> bool:
    return classify_geometry(o) is GeometryClass.HYPERBOLIC


def is_turnover(o: Orbifold) -> bool:
    return o.orientable and o.genus == 0 and len(o.cone_orders) == 3


@dataclass(frozen=True)
class SeifertInvariant:
    """Seifert invariant ``(base; b; fibers)``.

    Fibers with ``a == 1`` are accepted (they are folded into ``b`` by
    :func:`normalize`); every fiber with ``a >= 2`` sits over one cone
    point of ``base``.
    """

    base: Orbifold
    b: int
    fibers: Tuple[Fiber, ...] = ()

    def __post_init__(self):
        fibers = tuple((int(a), int(beta)) for a, beta in self.fibers)
        object.__setattr__(self, "fibers", fibers)
        for a, beta in fibers:
            if a < 1:
                raise InvalidInvariant(f"fiber order must be positive, got ({a},{beta})")
            if gcd(a, beta) != 1:
                raise GcdViolation(f"gcd of fiber ({a},{beta}) is {gcd(a, beta)}, expected 1")
        exceptional = Counter(a for a, _ in fibers if a >= 2)
        if exceptional != Counter(self.base.cone_orders):
            raise InvalidInvariant(
                f"fiber orders {sorted(exceptional.elements())} do not match "
                f"cone orders {list(self.base.cone_orders)}"
            )

    @classmethod
    def over(
        cls,
        genus: int,
        b: int,
        fibers: Iterable[Fiber] = (),
        orientable: bool = True,
    ) -> "SeifertInvariant":
        """Build an invariant, deriving the base cone orders from ``fibers``."""
        fibers = tuple(fibers)
        cones = tuple(a for a, _ in fibers if a >= 2)
        return cls(Orbifold(orientable, genus, cones), b, fibers)

    def is_normalized(self) -> bool:
        return self.fibers == tuple(sorted(self.fibers)) and all(
            a >= 2 and 0 <= beta < a for a, beta in self.fibers
        )


def euler_number(m: SeifertInvariant) -> Fraction:
    total = Fraction(m.b)
    for a, beta in m.fibers:
        total += Fraction(beta, a)
    return -total


def normalize(m: SeifertInvariant) -> SeifertInvariant:
    b = m.b
    fibers = []
    for a, beta in m.fibers:
        # beta = q*a + r: moving q*a out of the fiber adds q to b
        q, r = divmod(beta, a)
        b += q
        if a > 1:
            fibers.append((a, r))
    return SeifertInvariant(m.base, b, tuple(sorted(fibers)))


def reverse_orientation(m: SeifertInvariant) -> SeifertInvariant:
    flipped = tuple((a, -beta) for a, beta in m.fibers)
    return normalize(SeifertInvariant(m.base, -m.b, flipped))


def same_manifold(m1: SeifertInvariant, m2: SeifertInvariant, oriented: bool = True) -> bool:
    """Decide whether two invariants describe the same Seifert fibered manifold.

    Only hyperbolic bases are accepted, since only there is the fibering
    unique up to isotopy.  With ``oriented=False`` an orientation-reversing
    homeomorphism is also allowed.
    """
    for m in (m1, m2):
        if not is_hyperbolic(m.base):
            raise NonHyperbolicBase(
                f"base {m.base} is {classify_geometry(m.base).value}; fibering may not be unique"
            )
    n1 = normalize(m1)
    if n1 == normalize(m2):
        return True
    return not oriented and n1 == reverse_orientation(m2)


def unit_tangent_bundle(o: Orbifold) -> SeifertInvariant:
    if not o.orientable:
        raise NonOrientableBase(f"unit tangent bundle invariant needs an orientable base, got {o}")
    if not is_hyperbolic(o):
        raise NonHyperbolicBase(f"base {o} is {classify_geometry(o).value}")
    b = 2 - 2 * o.genus - len(o.cone_orders)
    return SeifertInvariant(o, b, tuple((a, 1) for a in o.cone_orders))
