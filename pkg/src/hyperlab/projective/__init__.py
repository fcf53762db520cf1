"""Finite projective spaces, their incidence hypergroups and collineations."""

from hyperlab.projective.collineations import (
    CollineationReport,
    SemilinearMap,
    apply_semilinear,
    enumerate_collineations,
    group_order,
    is_collineation,
    pgammal_order,
    semilinear_generators,
)
from hyperlab.projective.incidence import (
    IncidenceGroup,
    build_incidence_group,
    verify_incidence_group,
)
from hyperlab.projective.space import (
    Line,
    ProjectiveSpace,
    ProjPoint,
    canonical_coords,
    check_desargues,
    check_projective_axioms,
    geometry_from_hypergroup,
    incidence_hypergroup,
    line_of,
    parse_space_descriptor,
    projective_space,
    space_descriptor,
)

__all__ = [
    "CollineationReport",
    "IncidenceGroup",
    "Line",
    "ProjPoint",
    "ProjectiveSpace",
    "SemilinearMap",
    "apply_semilinear",
    "build_incidence_group",
    "canonical_coords",
    "check_desargues",
    "check_projective_axioms",
    "enumerate_collineations",
    "geometry_from_hypergroup",
    "group_order",
    "incidence_hypergroup",
    "is_collineation",
    "line_of",
    "parse_space_descriptor",
    "pgammal_order",
    "projective_space",
    "semilinear_generators",
    "space_descriptor",
    "verify_incidence_group",
]
