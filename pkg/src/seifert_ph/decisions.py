"""Verdicts on Anosov flows, partially hyperbolic maps and horizontal foliations.

Over a hyperbolic base, a Seifert fibered manifold carries an Anosov flow
(equivalently a transitive partially hyperbolic diffeomorphism) exactly
when it finitely covers the unit tangent bundle of the base.  Over a
turnover the transitivity hypothesis can be dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd
from typing import List, Optional, Union

from .coverings import Covers, Orientation, covers_unit_tangent_bundle, orientation_double_cover
from .errors import GenusTooSmall, NonHyperbolicBase, NotATurnover, NotInStatedFamily
from .invariants import (
    Orbifold,
    SeifertInvariant,
    classify_geometry,
    euler_number,
    is_hyperbolic,
    is_turnover,
    normalize,
    orbifold_euler_characteristic,
)


@dataclass(frozen=True)
class Yes:
    witness: Optional[Covers] = None
    note: str = ""


@dataclass(frozen=True)
class No:
    reason: str


@dataclass(frozen=True)
class OutOfScope:
    reason: str


Verdict = Union[Yes, No, OutOfScope]


def circle_bundle(genus: int, eu: int) -> SeifertInvariant:
    """Circle bundle over the closed orientable genus-``genus`` surface with Euler number ``eu``."""
    return SeifertInvariant.over(genus, -eu)


def _from_covering(m: SeifertInvariant, note: str = "") -> Verdict:
    verdict = covers_unit_tangent_bundle(m)
    if isinstance(verdict, Covers):
        return Yes(verdict, note)
    reason = f"does not finitely cover the unit tangent bundle ({verdict.reason})"
    return No(f"{reason}; {note}" if note else reason)


def admits_anosov(m: SeifertInvariant) -> Verdict:
    if not is_hyperbolic(m.base):
        return No("Anosov flows on Seifert fiber spaces require hyperbolic base")
    if not m.base.orientable:
        return _from_covering(
            orientation_double_cover(m), "decided on the orientation double cover of the base"
        )
    return _from_covering(m)


def admits_transitive_ph(m: SeifertInvariant) -> Verdict:
    """Transitive (or dynamically coherent, or homotopic to identity) PH verdict."""
    if not is_hyperbolic(m.base):
        return OutOfScope(
            f"{classify_geometry(m.base).value} base: virtually nilpotent or solvable fundamental "
            "group; see the existing classification for these geometries"
        )
    return admits_anosov(m)


def ph_circle_bundle(genus: int, eu: int) -> Verdict:
    """Closed-form test for circle bundles: ``eu`` must divide ``2 - 2*genus``."""
    if genus < 2:
        raise GenusTooSmall(f"genus must be >= 2, got {genus}")
    chi = 2 - 2 * genus
    if eu == 0:
        return No("Euler number zero (product bundle)")
    if chi % eu != 0:
        return No(f"Euler number {eu} does not divide chi = {chi}")
    orientation = Orientation.PRESERVING if eu > 0 else Orientation.REVERSING
    return Yes(Covers(abs(chi // eu), orientation))


def admits_ph_turnover(m: SeifertInvariant) -> Verdict:
    """PH verdict over a turnover; no dynamical hypothesis beyond partial hyperbolicity."""
    if not is_turnover(m.base):
        raise NotATurnover(f"base {m.base} is not a turnover")
    if not is_hyperbolic(m.base):
        return No(f"{classify_geometry(m.base).value} turnover supports no partially hyperbolic system")
    return _from_covering(m)


def horizontal_foliation_sufficient(m: SeifertInvariant) -> bool:
    """True guarantees a horizontal foliation; False is inconclusive.

    Only asserted for ``(b=-1; (a1,b1),(a2,b2),(a3,b3))`` over a sphere
    with ``0 < b_i < a_i``.
    """
    n = normalize(m)
    base = n.base
    if not (base.orientable and base.genus == 0 and len(n.fibers) == 3 and n.b == -1):
        raise NotInStatedFamily(
            "sufficient condition only stated for b=-1 with three exceptional fibers over the sphere"
        )
    if any(beta == 0 for _, beta in n.fibers):
        raise NotInStatedFamily("needs 0 < beta_i < alpha_i")
    return sum(Fraction(beta, a) for a, beta in n.fibers) < 1


def milnor_wood_necessary(m: SeifertInvariant) -> bool:
    """False rules out horizontal foliations: needs ``|e| <= -chi_orb``."""
    if not is_hyperbolic(m.base):
        raise NonHyperbolicBase(f"base {m.base} is {classify_geometry(m.base).value}")
    return abs(euler_number(m)) <= -orbifold_euler_characteristic(m.base)


def enumerate_turnover_gap_examples(max_alpha: int) -> List[SeifertInvariant]:
    """Invariants over hyperbolic turnovers with a horizontal foliation but no PH map.

    Searches normalized ``(b=-1; three fibers)`` with orders up to
    ``max_alpha``; results come in lexicographic order of the fiber list.
    """
    pairs = [
        (a, beta)
        for a in range(2, max_alpha + 1)
        for beta in range(1, a)
        if gcd(a, beta) == 1
    ]
    ratio = [Fraction(beta, a) for a, beta in pairs]
    found = []
    for i, j, k in combinations_with_replacement(range(len(pairs)), 3):
        # partial sums only grow, so the sufficient condition fails early
        if ratio[i] + ratio[j] >= 1 or ratio[i] + ratio[j] + ratio[k] >= 1:
            continue
        triple = (pairs[i], pairs[j], pairs[k])
        base = Orbifold.sphere(*(a for a, _ in triple))
        if not is_hyperbolic(base):
            continue
        m = SeifertInvariant(base, -1, triple)
        if horizontal_foliation_sufficient(m) and isinstance(admits_ph_turnover(m), No):
            found.append(m)
    return found
