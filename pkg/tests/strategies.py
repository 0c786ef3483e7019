"""Hypothesis strategies and seeded fuzzers for Seifert invariants."""

import random
from math import gcd

from hypothesis import strategies as st

from seifert_ph import Orbifold, SeifertInvariant, classify_geometry, GeometryClass


def _coprime_beta(a, raw):
    # walk upward until coprime; always terminates since gcd(a, k*a + 1) == 1
    beta = raw
    while gcd(a, beta) != 1:
        beta += 1
    return beta


@st.composite
def fibers(draw, max_alpha=11, max_fibers=4, beta_range=30):
    n = draw(st.integers(0, max_fibers))
    out = []
    for _ in range(n):
        a = draw(st.integers(2, max_alpha))
        out.append((a, _coprime_beta(a, draw(st.integers(-beta_range, beta_range)))))
    return out


@st.composite
def invariants(draw, orientable=None, hyperbolic=False, max_fibers=4):
    if orientable is None:
        orientable = draw(st.booleans())
    genus = draw(st.integers(0, 4) if orientable else st.integers(1, 5))
    fs = draw(fibers(max_fibers=max_fibers))
    if draw(st.booleans()):
        fs.append((1, draw(st.integers(-5, 5))))
    m = SeifertInvariant.over(genus, draw(st.integers(-10, 10)), fs, orientable=orientable)
    if hyperbolic and classify_geometry(m.base) is not GeometryClass.HYPERBOLIC:
        # genus bump keeps the fibers and forces chi_orb < 0
        base = m.base
        m = SeifertInvariant(Orbifold(base.orientable, base.genus + 2, base.cone_orders), m.b, m.fibers)
    return m


@st.composite
def orbifolds(draw, orientable=None):
    if orientable is None:
        orientable = draw(st.booleans())
    genus = draw(st.integers(0, 4) if orientable else st.integers(1, 5))
    cones = draw(st.lists(st.integers(2, 11), max_size=5))
    return Orbifold(orientable, genus, tuple(cones))


def random_invariant(rng: random.Random, orientable=None, hyperbolic=False,
                     max_genus=4, max_fibers=4, max_alpha=11) -> SeifertInvariant:
    """Seeded counterpart of :func:`invariants` for fixed-count acceptance runs."""
    while True:
        ori = rng.random() < 0.5 if orientable is None else orientable
        genus = rng.randint(0, max_genus) if ori else rng.randint(1, max_genus + 1)
        fs = []
        for _ in range(rng.randint(0, max_fibers)):
            a = rng.randint(2, max_alpha)
            fs.append((a, _coprime_beta(a, rng.randint(-30, 30))))
        m = SeifertInvariant.over(genus, rng.randint(-10, 10), fs, orientable=ori)
        if not hyperbolic or classify_geometry(m.base) is GeometryClass.HYPERBOLIC:
            return m
