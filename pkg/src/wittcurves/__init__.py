"""Exact invariants of real smooth projective curves, commutative or not.

The package models a noncommutative real curve by a signed Klein surface
(witt_surface), attaches weights to its points (weighted_curve), and
computes the classical invariants: local ramification data (local_data),
centres of twisted series rings (skew_series), Euler forms and slope
orbits (ktheory), and the finite zoo of curves with nonnegative orbifold
characteristic (zoo). All arithmetic is exact.
"""

from .algebra import (
    COMPLEX,
    QUATERNION,
    REAL,
    AlgebraElement,
    Automorphism,
    DivisionAlgebraKind,
    Rational,
    abstract_kind,
    comultiplicity,
    complex_conjugation,
    galois_order,
    identity,
    inner,
)
from .errors import (
    CurveError,
    DomainError,
    InconsistentDataError,
    InvariantViolation,
    KindMismatchError,
    ValidationError,
)
from .ktheory import (
    ClassVector,
    CurveNumerics,
    SlopeOrbits,
    average_euler_form,
    elliptic_numerics,
    euler_form,
    fm_partners,
    mutation_matrices,
    slope_orbits,
)
from .local_data import (
    PointDatum,
    WittPointClass,
    degree_of_simple,
    inertial_degree,
    local_skewness,
    skewness,
    witt_local_datum,
)
from .skew_series import (
    CentreDescription,
    TwistedSeries,
    centre_basis,
    dim_over_centre,
    monomial,
    series,
    series_multiply,
    valuation,
    verify_jordan_twist,
)
from .weighted_curve import (
    AbstractBase,
    AbstractPoint,
    CurveClass,
    GhostGroup,
    PicardDescriptor,
    WeightedCurve,
    WeightedPoint,
    classify,
    cy_dimension,
    effective_points,
    genus_zero_orbifold_euler,
    ghost_group,
    invariants_report,
    orbifold_euler,
    picard_structure,
    tau_exponents,
    tau_order,
    tau_word,
    weight_ram_vector,
)
from .witt_surface import (
    CATALOG_NAMES,
    ComplexCentreBase,
    KleinTopology,
    Oval,
    WittSurface,
    catalog,
    constants_field,
    counts,
    euler_characteristics,
    genus,
    segmented_oval,
    surface_skewness,
    whole_oval,
)
from .zoo import ZooEntry, enumerate_chi_zero, enumerate_domestic, instantiate_domestic, zoo_report

__all__ = [
    "AbstractBase",
    "AbstractPoint",
    "AlgebraElement",
    "Automorphism",
    "CATALOG_NAMES",
    "COMPLEX",
    "CentreDescription",
    "ClassVector",
    "ComplexCentreBase",
    "CurveClass",
    "CurveError",
    "CurveNumerics",
    "DivisionAlgebraKind",
    "DomainError",
    "GhostGroup",
    "InconsistentDataError",
    "InvariantViolation",
    "KindMismatchError",
    "KleinTopology",
    "Oval",
    "PicardDescriptor",
    "PointDatum",
    "QUATERNION",
    "REAL",
    "Rational",
    "SlopeOrbits",
    "TwistedSeries",
    "ValidationError",
    "WeightedCurve",
    "WeightedPoint",
    "WittPointClass",
    "WittSurface",
    "ZooEntry",
    "abstract_kind",
    "average_euler_form",
    "catalog",
    "centre_basis",
    "classify",
    "complex_conjugation",
    "comultiplicity",
    "constants_field",
    "counts",
    "cy_dimension",
    "degree_of_simple",
    "dim_over_centre",
    "effective_points",
    "elliptic_numerics",
    "enumerate_chi_zero",
    "enumerate_domestic",
    "euler_characteristics",
    "euler_form",
    "fm_partners",
    "galois_order",
    "genus",
    "genus_zero_orbifold_euler",
    "ghost_group",
    "identity",
    "inertial_degree",
    "inner",
    "instantiate_domestic",
    "invariants_report",
    "local_skewness",
    "monomial",
    "mutation_matrices",
    "orbifold_euler",
    "picard_structure",
    "segmented_oval",
    "series",
    "series_multiply",
    "skewness",
    "slope_orbits",
    "surface_skewness",
    "tau_exponents",
    "tau_order",
    "tau_word",
    "valuation",
    "verify_jordan_twist",
    "weight_ram_vector",
    "whole_oval",
    "witt_local_datum",
    "zoo_report",
]
