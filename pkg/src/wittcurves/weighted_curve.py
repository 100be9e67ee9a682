"""Weighted curves: orbifold Euler characteristics, classification, Picard data.

A weighted curve is a base (a real surface from witt_surface, a complex
base, or an explicit abstract record for other ground fields) together with
weight insertions p >= 2 at chosen points. Every numerical invariant is
driven by the effective point list: each point contributes through its
weight p, its ramification index e_tau, and its residue degree f.

The normalized orbifold Euler characteristic is computed by three
independent routes (the general formula over the centre, the split through
the non-weighted curve, and a Thurston-style count for real bases) which
must agree exactly; a fourth genus-zero route is checked where it applies.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import (
    DomainError,
    InconsistentDataError,
    InvariantViolation,
    ValidationError,
)
from .local_data import WittPointClass
from .witt_surface import (
    MINUS,
    PLUS,
    ComplexCentreBase,
    WittSurface,
    canonical_key,
    catalog,
    constants_field,
    counts,
    euler_characteristics,
    genus,
    surface_skewness,
    validate,
)

# placement marker for weights on a complex-centre base
COMPLEX_POINT = "point"

TUBULAR_VECTORS = frozenset({(2, 2, 2, 2), (2, 3, 6), (2, 4, 4), (3, 3, 3)})


class CurveClass(enum.Enum):
    DOMESTIC = "domestic"
    ELLIPTIC = "elliptic"
    TUBULAR = "tubular"
    WILD = "wild"


@dataclass(frozen=True, slots=True)
class WeightedPoint:
    """A weight insertion: where it sits and the weight p >= 2.

    For segmentation placements the (oval, segment) coordinates are
    mandatory so that collisions can be detected; boundary and inner
    placements name anonymous points and may repeat.
    """

    location: WittPointClass | str
    weight: int
    oval: int | None = None
    segment: int | None = None


@dataclass(frozen=True, slots=True)
class AbstractPoint:
    """A closed point of an abstract base, weights baked in."""

    label: str
    e_tau: int = 1
    residue_degree: int = 1
    weight: int = 1


@dataclass(frozen=True, slots=True)
class AbstractBase:
    """Numerical stand-in for a curve over an arbitrary perfect field."""

    chi_x: Fraction
    s: int
    kappa: int
    epsilon: int
    points: tuple[AbstractPoint, ...]
    centre_genus: int | None = None


@dataclass(frozen=True, slots=True)
class EffectivePoint:
    label: str
    kind: str
    e_tau: int
    residue_degree: int
    weight: int


Base = WittSurface | ComplexCentreBase | AbstractBase


@dataclass(frozen=True, slots=True)
class WeightedCurve:
    base: Base
    points: tuple[WeightedPoint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        _validate_curve(self)


def _oval_has_sign(oval, sign: str) -> bool:
    return oval.sign == sign or sign in oval.segments


def _validate_curve(c: WeightedCurve) -> None:
    base = c.base
    if isinstance(base, AbstractBase):
        if c.points:
            raise ValidationError(
                "weights on an abstract base belong in its point records",
                code="placement",
            )
        labels = [p.label for p in base.points]
        if len(set(labels)) != len(labels):
            raise ValidationError("abstract point labels must be unique", code="duplicate-placement")
        for p in base.points:
            if p.e_tau < 1 or p.residue_degree < 1 or p.weight < 1:
                raise ValidationError(f"point {p.label} has a nonpositive entry", code="nonpositive")
        if base.s < 1 or base.kappa < 1 or base.epsilon < 1:
            raise ValidationError("base numerics must be positive", code="nonpositive")
        return

    validate(base)
    for wp in c.points:
        if wp.weight < 2:
            raise ValidationError("an inserted weight must be at least 2", code="weight")

    if isinstance(base, ComplexCentreBase):
        for wp in c.points:
            if wp.location != COMPLEX_POINT:
                raise ValidationError(
                    "a complex-centre base only accepts plain point placements",
                    code="placement",
                )
        return

    seen_segments: set[tuple[int, int]] = set()
    for wp in c.points:
        if not isinstance(wp.location, WittPointClass):
            raise ValidationError(f"invalid placement {wp.location!r}", code="placement")
        if wp.location is WittPointClass.SEGMENTATION:
            if wp.oval is None or wp.segment is None:
                raise ValidationError(
                    "a segmentation weight needs oval and segment indices", code="placement"
                )
            if not 0 <= wp.oval < len(base.ovals) or not base.ovals[wp.oval].segmented:
                raise ValidationError("no such segmented oval", code="placement")
            if not 0 <= wp.segment < len(base.ovals[wp.oval].segments):
                raise ValidationError("segment index out of range", code="placement")
            key = (wp.oval, wp.segment)
            if key in seen_segments:
                raise ValidationError(
                    "two weights on the same segmentation point", code="duplicate-placement"
                )
            seen_segments.add(key)
        elif wp.location in (WittPointClass.REAL_BOUNDARY, WittPointClass.QUATERNION_BOUNDARY):
            sign = PLUS if wp.location is WittPointClass.REAL_BOUNDARY else MINUS
            if wp.oval is not None:
                if not 0 <= wp.oval < len(base.ovals) or not _oval_has_sign(base.ovals[wp.oval], sign):
                    raise ValidationError("that oval has no locus of the requested sign", code="placement")
            elif not any(_oval_has_sign(o, sign) for o in base.ovals):
                raise ValidationError("the surface has no locus of the requested sign", code="placement")
        # inner placements are always available


# ---------------------------------------------------------------------------
# Effective points

_RESIDUE = {
    WittPointClass.INNER: 2,
    WittPointClass.REAL_BOUNDARY: 1,
    WittPointClass.QUATERNION_BOUNDARY: 1,
}
_SHORT = {
    WittPointClass.INNER: "inner",
    WittPointClass.REAL_BOUNDARY: "real",
    WittPointClass.QUATERNION_BOUNDARY: "quat",
}


def effective_points(c: WeightedCurve) -> tuple[EffectivePoint, ...]:
    """All points that can contribute to an invariant.

    Unweighted boundary and inner points have e_tau = 1 and weight 1, so
    every formula sees them as zero; only segmentation points and weighted
    points are ever listed.
    """
    base = c.base
    if isinstance(base, AbstractBase):
        return tuple(
            EffectivePoint(p.label, "abstract", p.e_tau, p.residue_degree, p.weight)
            for p in base.points
        )
    if isinstance(base, ComplexCentreBase):
        return tuple(
            EffectivePoint(f"pt{i}", COMPLEX_POINT, 1, 1, wp.weight)
            for i, wp in enumerate(c.points)
        )
    out = []
    seg_weight = {
        (wp.oval, wp.segment): wp.weight
        for wp in c.points
        if wp.location is WittPointClass.SEGMENTATION
    }
    for oi, oval in enumerate(base.ovals):
        for si in range(len(oval.segments)):
            out.append(
                EffectivePoint(
                    f"seg{oi}.{si}", "segmentation", 2, 1, seg_weight.get((oi, si), 1)
                )
            )
    counters = {cls: 0 for cls in _SHORT}
    for wp in c.points:
        if wp.location is WittPointClass.SEGMENTATION:
            continue
        n = counters[wp.location]
        counters[wp.location] = n + 1
        out.append(
            EffectivePoint(
                f"{_SHORT[wp.location]}{n}",
                wp.location.value,
                1,
                _RESIDUE[wp.location],
                wp.weight,
            )
        )
    return tuple(out)


# ---------------------------------------------------------------------------
# Base numerics

def curve_skewness(c: WeightedCurve) -> int:
    if isinstance(c.base, AbstractBase):
        return c.base.s
    return surface_skewness(c.base)


def curve_kappa(c: WeightedCurve) -> int:
    if isinstance(c.base, AbstractBase):
        return c.base.kappa
    # a complex-centre curve lives over its own constants field, so the
    # constants contribute dimension 1, not [C:R]
    if isinstance(c.base, ComplexCentreBase):
        return 1
    return constants_field(c.base).dim_over_k


def curve_epsilon(c: WeightedCurve) -> int:
    """Smallest positive degree of a line bundle, as a normalizer.

    For real bases this is 2 exactly when no rational section of odd
    degree exists: a commutative curve with empty real locus, or a
    noncommutative one whose ovals are whole and not all quaternion.
    """
    base = c.base
    if isinstance(base, AbstractBase):
        return base.epsilon
    if isinstance(base, ComplexCentreBase):
        return 1
    if base.commutative:
        return 2 if base.topology.t == 0 else 1
    m, r, _ = counts(base)
    return 2 if (m == 0 and r > 0) else 1


def pbar(c: WeightedCurve) -> int:
    if isinstance(c.base, AbstractBase):
        weights = [p.weight for p in c.base.points]
    else:
        weights = [wp.weight for wp in c.points]
    return lcm(*weights) if weights else 1


def centre_genus(c: WeightedCurve) -> int | None:
    base = c.base
    if isinstance(base, AbstractBase):
        return base.centre_genus
    if isinstance(base, ComplexCentreBase):
        return base.genus
    return base.topology.g


def _chi_centre(c: WeightedCurve) -> Fraction:
    base = c.base
    if isinstance(base, AbstractBase):
        return Fraction(base.chi_x)
    if isinstance(base, ComplexCentreBase):
        return Fraction(1 - base.genus)
    return Fraction(1 - base.topology.g)


def _chi_prime_nonweighted(c: WeightedCurve) -> Fraction:
    base = c.base
    if isinstance(base, AbstractBase):
        return _chi_centre(c) - Fraction(1, 2) * sum(
            (1 - Fraction(1, p.e_tau)) * p.residue_degree for p in base.points
        )
    if isinstance(base, ComplexCentreBase):
        return Fraction(1 - base.genus)
    return euler_characteristics(base)[1]


# ---------------------------------------------------------------------------
# Orbifold Euler characteristic

def genus_zero_orbifold_euler(kappa, s, epsilon, points) -> Fraction:
    """Normalized orbifold characteristic over any field, genus-zero case.

    points is an iterable of (e, f, p) triples; only the product e*f
    enters. No separability assumption is needed here.
    """
    total = sum(
        (Fraction(e) * Fraction(f) * (1 - Fraction(1, p)) for e, f, p in points),
        start=Fraction(0),
    )
    return Fraction(kappa, s * s) - Fraction(kappa * epsilon, 2 * s * s) * total


def any_field_triples(c: WeightedCurve) -> tuple[tuple[int, Fraction, int], ...]:
    """(e, f, p) data feeding the genus-zero formula, with e*f recovered
    from the real local data via e*f = (s^2 / (kappa*epsilon)) * f_res / e_tau."""
    s = curve_skewness(c)
    kap = curve_kappa(c)
    eps = curve_epsilon(c)
    return tuple(
        (1, Fraction(s * s * pt.residue_degree, kap * eps * pt.e_tau), pt.weight)
        for pt in effective_points(c)
    )


def orbifold_euler(c: WeightedCurve) -> Fraction:
    """Normalized orbifold Euler characteristic, cross-checked three ways."""
    pts = effective_points(c)
    general = _chi_centre(c) - Fraction(1, 2) * sum(
        (1 - Fraction(1, pt.weight * pt.e_tau)) * pt.residue_degree for pt in pts
    )
    split = _chi_prime_nonweighted(c) - Fraction(1, 2) * sum(
        Fraction(1, pt.e_tau) * (1 - Fraction(1, pt.weight)) * pt.residue_degree
        for pt in pts
    )
    if general != split:
        raise InvariantViolation(
            f"Euler characteristic mismatch: general {general}, split {split}"
        )
    if isinstance(c.base, WittSurface):
        thurston = _chi_prime_nonweighted(c)
        for pt in pts:
            share = 1 - Fraction(1, pt.weight)
            if pt.kind == "segmentation":
                thurston -= Fraction(1, 4) * share
            elif pt.kind == "inner":
                thurston -= share
            else:
                thurston -= Fraction(1, 2) * share
        if thurston != general:
            raise InvariantViolation(
                f"Euler characteristic mismatch: general {general}, boundary count {thurston}"
            )
    if not isinstance(c.base, AbstractBase) and genus(c.base) == 0:
        anyfield = genus_zero_orbifold_euler(
            curve_kappa(c), curve_skewness(c), curve_epsilon(c), any_field_triples(c)
        )
        if anyfield != general:
            raise InvariantViolation(
                f"Euler characteristic mismatch: general {general}, genus-zero form {anyfield}"
            )
    return general


# ---------------------------------------------------------------------------
# Classification

def weight_ram_vector(c: WeightedCurve) -> tuple[int, ...]:
    """Sorted multiset of p(x)*e_tau(x) > 1, each counted residue-degree times."""
    entries: list[int] = []
    for pt in effective_points(c):
        v = pt.weight * pt.e_tau
        if v > 1:
            entries.extend([v] * pt.residue_degree)
    return tuple(sorted(entries))


def _domestic_genus_zero_vector(v: tuple[int, ...]) -> bool:
    if len(v) <= 2:
        return True
    if len(v) == 3:
        return (v[0], v[1]) == (2, 2) or v in ((2, 3, 3), (2, 3, 4), (2, 3, 5))
    return False


def classify(c: WeightedCurve) -> CurveClass:
    chi = orbifold_euler(c)
    if chi > 0:
        result = CurveClass.DOMESTIC
    elif chi == 0:
        result = CurveClass.ELLIPTIC if pbar(c) == 1 else CurveClass.TUBULAR
    else:
        result = CurveClass.WILD
    vector = weight_ram_vector(c)
    cg = centre_genus(c)
    if result is CurveClass.TUBULAR:
        if vector not in TUBULAR_VECTORS:
            raise InvariantViolation(f"tubular curve with vector {vector}")
        if cg is not None and cg != 0:
            raise InvariantViolation("tubular curve with a positive-genus centre")
    if result is CurveClass.DOMESTIC and cg == 0 and not _domestic_genus_zero_vector(vector):
        raise InvariantViolation(f"domestic genus-zero curve with vector {vector}")
    return result


# ---------------------------------------------------------------------------
# The canonical automorphism tau

def tau_exponents(c: WeightedCurve) -> dict[str, int]:
    """Exponent p(x)*e_tau(x) - 1 of the Picard-shift at each point; zeros omitted."""
    out = {}
    for pt in effective_points(c):
        exp = pt.weight * pt.e_tau - 1
        if exp:
            out[pt.label] = exp
    return out


def tau_word(c: WeightedCurve) -> tuple[tuple[str, int], ...]:
    """Full Picard word for tau over a genus-zero centre.

    The leading factor is the shift at an auxiliary rational point x0
    carrying neither ramification nor weight, with exponent -2/epsilon.
    Raised DomainError when the centre has positive genus or, as for the
    real conic without real points, no eligible x0 exists.
    """
    if centre_genus(c) != 0:
        raise DomainError("the explicit word requires a genus-zero centre")
    base = c.base
    if isinstance(base, WittSurface) and base.topology.t == 0:
        raise DomainError("no rational point without ramification or weight exists")
    eps = curve_epsilon(c)
    prefix = ("x0", -(2 // eps))
    body = tuple(sorted(tau_exponents(c).items()))
    return (prefix,) + body


def tau_order(c: WeightedCurve) -> int:
    """Order of tau on degree-zero classes; only finite when chi'_orb = 0."""
    if orbifold_euler(c) != 0:
        raise DomainError("tau has finite order only when the orbifold characteristic vanishes")
    order = max((pt.weight * pt.e_tau for pt in effective_points(c)), default=1)
    if order not in (1, 2, 3, 4, 6):
        raise InvariantViolation(f"unexpected tau order {order}")
    return order


def cy_dimension(c: WeightedCurve) -> tuple[int, int]:
    """Calabi-Yau dimension n/n, reported as the pair (n, n)."""
    n = tau_order(c)
    return (n, n)


# ---------------------------------------------------------------------------
# Picard structure

@dataclass(frozen=True, slots=True)
class PicardDescriptor:
    base_part: str
    torsion_quotient: tuple[int, ...]
    finitely_generated_rank_one: bool
    pic_zero: str | None = None


def picard_structure(c: WeightedCurve) -> PicardDescriptor:
    """Shape of the Picard group read off the weighted ramification sequence.

    Pic(H) sits between Pic(X) and the product of cyclic groups of the
    orders in the weight-ramification vector. The degree-zero part is only
    pinned down for the known genus-one case with four segmentation
    points, where it is the Klein four-group.
    """
    cg = centre_genus(c)
    if cg is None:
        raise DomainError("the Picard description needs a known centre genus")
    fg = cg == 0
    base_part = "Z" if fg else "not finitely generated (Pic_0 of positive-genus X)"
    pic_zero = None
    if (
        not c.points
        and isinstance(c.base, WittSurface)
        and canonical_key(c.base) == canonical_key(catalog("D_2222"))
    ):
        pic_zero = "C2 x C2"
    return PicardDescriptor(
        base_part=base_part,
        torsion_quotient=weight_ram_vector(c),
        finitely_generated_rank_one=fg,
        pic_zero=pic_zero,
    )


# ---------------------------------------------------------------------------
# Ghost groups

@dataclass(frozen=True, slots=True)
class GhostGroup:
    """Product of cyclic groups C_n, with the shift exponents d(y) that
    witness how each generator is normalized against the efficient point."""

    orders: tuple[int, ...]
    shifts: tuple[tuple[int, Fraction], ...]

    def describe(self) -> str:
        if not self.orders:
            return "trivial"
        return " x ".join(f"C{n}" for n in self.orders)


def ghost_group(points, efficient_index: int) -> GhostGroup:
    """Ghost group of a genus-zero non-weighted curve.

    points is a list of (e_tau, residue_degree) pairs; the efficient point
    x is the one whose Picard-shift is used to cancel degrees. For every
    other point y the exponent d(y) satisfies e_tau(y) d(y) = (f_y/f_x)
    e_tau(x); it must be an integer whenever y is a ramification point.
    """
    pts = [(int(e), int(f)) for e, f in points]
    for e, f in pts:
        if e < 1 or f < 1:
            raise ValidationError("e_tau and residue degrees must be positive", code="nonpositive")
    if not 0 <= efficient_index < len(pts):
        raise ValidationError("efficient point index out of range", code="placement")
    ex_tau, ex_f = pts[efficient_index]
    orders: list[int] = []
    shifts: list[tuple[int, Fraction]] = []
    for i, (e_tau, f) in enumerate(pts):
        if i == efficient_index:
            continue
        d = Fraction(ex_tau * f, e_tau * ex_f)
        if e_tau > 1:
            if d.denominator != 1:
                raise InconsistentDataError(
                    f"shift exponent {d} at point {i} is not an integer"
                )
            orders.append(e_tau)
        shifts.append((i, d))
    return GhostGroup(orders=tuple(sorted(orders)), shifts=tuple(shifts))


# ---------------------------------------------------------------------------
# Reporting

def invariants_report(c: WeightedCurve) -> dict:
    """Everything the command line prints, as plain values."""
    chi = orbifold_euler(c)
    report = {
        "kappa": curve_kappa(c),
        "epsilon": curve_epsilon(c),
        "skewness": curve_skewness(c),
        "pbar": pbar(c),
        "chi_orb": chi,
        "curve_class": classify(c).value,
        "weight_ram_vector": weight_ram_vector(c),
        "tau_order": None,
        "cy_dimension": None,
        "picard": None,
    }
    if chi == 0:
        report["tau_order"] = tau_order(c)
        report["cy_dimension"] = cy_dimension(c)
    if centre_genus(c) is not None:
        report["picard"] = picard_structure(c)
    return report
