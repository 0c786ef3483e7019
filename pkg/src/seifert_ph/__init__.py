"""Seifert fibered spaces: exact invariants, fiberwise coverings of unit
tangent bundles, and existence verdicts for Anosov flows and partially
hyperbolic diffeomorphisms."""

import json
from importlib import resources

from .coverings import (
    Covers,
    DoesNotCover,
    Orientation,
    covers_unit_tangent_bundle,
    fiberwise_pushforward,
    hurwitz_euler,
    orientation_double_cover,
)
from .decisions import (
    No,
    OutOfScope,
    Yes,
    admits_anosov,
    admits_ph_turnover,
    admits_transitive_ph,
    circle_bundle,
    enumerate_turnover_gap_examples,
    horizontal_foliation_sufficient,
    milnor_wood_necessary,
    ph_circle_bundle,
)
from .errors import *  # noqa: F401,F403
from .groups import (
    CentralWord,
    circle_bundle_presentation,
    commutator,
    multiply,
    reduce_word,
    verify_hurwitz_symbolic,
)
from .invariants import (
    GeometryClass,
    Orbifold,
    SeifertInvariant,
    classify_geometry,
    euler_number,
    is_turnover,
    normalize,
    orbifold_euler_characteristic,
    reverse_orientation,
    same_manifold,
    unit_tangent_bundle,
)
from .syntax import parse_sfs, render_sfs


def report_schema() -> dict:
    """JSON schema for ``--format json`` reports."""
    return json.loads(resources.files(__name__).joinpath("report_schema.json").read_text())
