"""Exact computations with root systems, weight multiplicities, and
regular-torus classification for simple algebraic groups."""

import os as _os

# The reference tables ship inside the package; point the engine at them
# unless the caller overrides the location.
_data = _os.path.join(_os.path.dirname(__file__), "data")
if "RTK_TABLES_DIR" not in _os.environ and _os.path.isdir(_data):
    _os.environ["RTK_TABLES_DIR"] = _data

from ._core import (  # noqa: E402
    RtkError,
    cartan_matrix,
    classify_json,
    dominant_representative,
    element_regularity,
    exceptional_audit,
    freudenthal_multiplicity,
    is_self_dual,
    longest_element_action,
    omega1_membership,
    omega2_membership,
    orbit_size,
    positive_root_count,
    reflect,
    regular_torus_verdict,
    restrict_weight,
    schema_version,
    steinberg_indicator,
    subdominant_weights,
    verify_tables,
    weight_multiset,
    weyl_dimension,
)

__all__ = [
    "RtkError",
    "cartan_matrix",
    "classify_json",
    "dominant_representative",
    "element_regularity",
    "exceptional_audit",
    "freudenthal_multiplicity",
    "is_self_dual",
    "longest_element_action",
    "omega1_membership",
    "omega2_membership",
    "orbit_size",
    "positive_root_count",
    "reflect",
    "regular_torus_verdict",
    "restrict_weight",
    "schema_version",
    "steinberg_indicator",
    "subdominant_weights",
    "verify_tables",
    "weight_multiset",
    "weyl_dimension",
]
