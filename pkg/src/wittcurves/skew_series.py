"""Truncated twisted power and Laurent series over R, C or H.

A series lives in D[[T, sigma]] (or D((T, sigma)) when some exponents are
negative) where sigma is an automorphism of D and the variable obeys
T a = sigma(a) T, so monomials multiply by (a T^i)(b T^j) =
a sigma^i(b) T^(i+j). Everything is truncated: coefficients at exponents
>= truncation are unrepresented and all identities hold modulo T^N.

The centre computation solves the commutation conditions by brute force
(exact linear algebra over the rationals) and cross-checks the result
against the closed form K[[T^r]], K = Z(D) intersect Fix(sigma),
r = the order of sigma modulo inner automorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    COMPLEX,
    REAL,
    AlgebraElement,
    Automorphism,
    DivisionAlgebraKind,
    apply,
    apply_power,
    basis,
    comultiplicity,
    galois_order,
    one,
    zero,
)
from .errors import DomainError, InvariantViolation, KindMismatchError


def _coerce(kind: DivisionAlgebraKind, value) -> AlgebraElement:
    if isinstance(value, AlgebraElement):
        if value.kind is not kind:
            raise KindMismatchError("coefficient kind does not match the series ring")
        return value
    return one(kind) * Fraction(value)


@dataclass(frozen=True, slots=True)
class TwistedSeries:
    """A twisted series with finitely many terms, valid modulo T^truncation."""

    kind: DivisionAlgebraKind
    twist: Automorphism
    truncation: int
    coeffs: tuple[tuple[int, AlgebraElement], ...]

    def coeff(self, exponent: int) -> AlgebraElement:
        for e, c in self.coeffs:
            if e == exponent:
                return c
        return zero(self.kind)

    def low(self) -> int | None:
        """Least exponent with a nonzero coefficient, or None for the zero series."""
        return self.coeffs[0][0] if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "TwistedSeries") -> "TwistedSeries":
        _require_same_ring(self, other)
        acc = dict(self.coeffs)
        for e, c in other.coeffs:
            acc[e] = acc.get(e, zero(self.kind)) + c
        return series(self.kind, self.twist, self.truncation, acc)

    def __neg__(self) -> "TwistedSeries":
        return TwistedSeries(
            self.kind, self.twist, self.truncation,
            tuple((e, -c) for e, c in self.coeffs),
        )

    def __sub__(self, other: "TwistedSeries") -> "TwistedSeries":
        return self + (-other)

    def __mul__(self, other: "TwistedSeries") -> "TwistedSeries":
        _require_same_ring(self, other)
        acc: dict[int, AlgebraElement] = {}
        for i, a in self.coeffs:
            for j, b in other.coeffs:
                k = i + j
                if k >= self.truncation:
                    continue
                term = a * apply_power(self.twist, i, b)
                acc[k] = acc.get(k, zero(self.kind)) + term
        return series(self.kind, self.twist, self.truncation, acc)

    def __repr__(self):
        if not self.coeffs:
            return "0"

        def term(e, c):
            if e == 0:
                return f"({c!r})"
            t = "T" if e == 1 else f"T^{e}"
            return t if c == one(self.kind) else f"({c!r}){t}"

        return " + ".join(term(e, c) for e, c in self.coeffs)


def _require_same_ring(f: TwistedSeries, g: TwistedSeries) -> None:
    if f.kind is not g.kind or f.twist != g.twist or f.truncation != g.truncation:
        raise KindMismatchError("series live in different twisted rings")


def series(kind, twist, truncation, coeffs) -> TwistedSeries:
    """Build a series from an {exponent: coefficient} mapping.

    Coefficients may be AlgebraElements or plain rationals/ints. Exponents
    at or above the truncation are rejected rather than silently dropped;
    negative exponents produce Laurent series.
    """
    if twist.kind is not kind:
        raise KindMismatchError("twist acts on a different algebra")
    if truncation < 1:
        raise DomainError("truncation must be a positive integer")
    cleaned = {}
    for e, v in coeffs.items():
        if e >= truncation:
            raise KindMismatchError(f"exponent {e} is not below the truncation {truncation}")
        c = _coerce(kind, v)
        if not c.is_zero():
            cleaned[int(e)] = c
    return TwistedSeries(kind, twist, truncation, tuple(sorted(cleaned.items())))


def monomial(kind, twist, truncation, exponent: int, coefficient=1) -> TwistedSeries:
    return series(kind, twist, truncation, {exponent: coefficient})


def series_multiply(f: TwistedSeries, g: TwistedSeries) -> TwistedSeries:
    """Twisted Cauchy product, c_k = sum over i+j=k of a_i sigma^i(b_j)."""
    return f * g


def valuation(f: TwistedSeries) -> Fraction:
    """Exponential valuation v(f) = (1/2)^l, l the least exponent present."""
    low = f.low()
    if low is None:
        raise DomainError("the zero series has no valuation")
    return Fraction(1, 2) ** low


# ---------------------------------------------------------------------------
# Centre computation

@dataclass(frozen=True, slots=True)
class CentreDescription:
    """The centre of D[[T, sigma]]: K[[T^period]] with K the constant subfield."""

    constant_subfield: DivisionAlgebraKind
    period: int
    unit_exponent_note: str


def _column(kind, x: AlgebraElement) -> list[Fraction]:
    return list(x.coeffs)


def _mat_from_action(kind, images: list[AlgebraElement]) -> list[list[Fraction]]:
    """Matrix (rows) of a linear map given by its images on the basis."""
    n = kind.dim_over_k
    cols = [_column(kind, img) for img in images]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _left_mul_matrix(kind, d: AlgebraElement):
    return _mat_from_action(kind, [d * e for e in basis(kind)])


def _right_mul_matrix(kind, d: AlgebraElement):
    return _mat_from_action(kind, [e * d for e in basis(kind)])


def _twist_matrix(kind, twist: Automorphism):
    return _mat_from_action(kind, [apply(twist, e) for e in basis(kind)])


def _kernel(rows: list[list[Fraction]], n: int) -> list[list[Fraction]]:
    """Basis of the null space of the given rational matrix, by elimination."""
    m = [row[:] for row in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(n):
        pivot_row = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pv = m[rank][col]
        m[rank] = [v / pv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(n) if c not in pivots]
    out = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -m[r][fc]
        out.append(vec)
    return out


def _constant_subfield_basis(kind, twist) -> list[list[Fraction]]:
    """Closed-form basis of K = Z(D) intersect Fix(twist), as coordinate vectors."""
    n = kind.dim_over_k
    e0 = [Fraction(1)] + [Fraction(0)] * (n - 1)
    if kind is COMPLEX and twist.action == "identity":
        return [e0, [Fraction(0), Fraction(1)]]
    # every remaining built-in case has K = R
    return [e0]


def _in_span(vec, span_basis) -> bool:
    """Membership test by eliminating against the (echelonized) span basis."""
    work = [list(v) for v in span_basis]
    target = list(vec)
    # reduce target against each basis vector's leading coordinate
    for b in work:
        lead = next((i for i, v in enumerate(b) if v != 0), None)
        if lead is None:
            continue
        if target[lead] != 0:
            factor = target[lead] / b[lead]
            target = [t - factor * v for t, v in zip(target, b)]
    return all(v == 0 for v in target)


def centre_basis(kind: DivisionAlgebraKind, twist: Automorphism, truncation: int) -> CentreDescription:
    """Brute-force the centre of D[[T, sigma]] up to T^truncation.

    Solves, for every exponent s, the exact linear system "commutes with T
    and with every basis element of D" and checks the solutions against
    K[[T^r]]. A disagreement raises InvariantViolation; inner twists are
    rejected because their centre involves a nontrivial unit (centre
    R[[uT]] rather than R[[T]]), which is out of scope here.
    """
    if twist.kind is not kind:
        raise KindMismatchError("twist acts on a different algebra")
    if twist.action == "inner":
        raise DomainError("centre with a nontrivial unit is not supported")
    r = galois_order(twist)
    if truncation < 2 * r:
        raise DomainError(f"truncation {truncation} cannot witness the period {r}")

    n = kind.dim_over_k
    ident = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    twist_m = _twist_matrix(kind, twist)
    fix_rows = [[a - b for a, b in zip(twist_m[i], ident[i])] for i in range(n)]
    expected_k = _constant_subfield_basis(kind, twist)

    for s in range(truncation):
        rows = [row[:] for row in fix_rows]
        for d in basis(kind):
            right = _right_mul_matrix(kind, apply_power(twist, s, d))
            left = _left_mul_matrix(kind, d)
            rows.extend([a - b for a, b in zip(right[i], left[i])] for i in range(n))
        kernel = _kernel(rows, n)
        expected = expected_k if s % r == 0 else []
        if len(kernel) != len(expected):
            raise InvariantViolation(
                f"centre dimension at T^{s} is {len(kernel)}, expected {len(expected)}"
            )
        for vec in kernel:
            if not _in_span(vec, expected_k if expected else []):
                raise InvariantViolation(f"unexpected central coefficient at T^{s}: {vec}")

    subfield = REAL if len(expected_k) == 1 else COMPLEX
    return CentreDescription(constant_subfield=subfield, period=r, unit_exponent_note="u = 1")


def dim_over_centre(kind: DivisionAlgebraKind, twist: Automorphism) -> int:
    """Dimension of D((T, sigma)) over its centre: comultiplicity^2 * order^2.

    Cross-checked against the basis count [D : K] * r coming from the basis
    {d_alpha T^s, 0 <= s < r} over K((T^r)).
    """
    if twist.kind is not kind:
        raise KindMismatchError("twist acts on a different algebra")
    e_star = comultiplicity(kind)
    r = galois_order(twist)
    formula = e_star * e_star * r * r
    k_dim = len(_constant_subfield_basis(kind, twist)) if twist.action != "inner" else 1
    basis_count = (kind.dim_over_k // k_dim) * r
    if formula != basis_count:
        raise InvariantViolation(
            f"dimension formula {formula} disagrees with basis count {basis_count}"
        )
    return formula


# ---------------------------------------------------------------------------
# Jordan blocks under a twist

def _side_diagonal(kind, twist, b: AlgebraElement, offset: int, n: int):
    """The twisted side-diagonal matrix: entry (i, i+offset) is sigma^i(b)."""
    z = zero(kind)
    m = [[z] * n for _ in range(n)]
    for i in range(n - offset):
        m[i][i + offset] = apply_power(twist, i, b)
    return m


def _matmul(kind, a, b):
    n = len(a)
    z = zero(kind)
    out = [[z] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = z
            for k in range(n):
                acc = acc + a[i][k] * b[k][j]
            out[i][j] = acc
    return out


def verify_jordan_twist(kind: DivisionAlgebraKind, twist: Automorphism, n: int) -> bool:
    """Check J^l (a I) = sigma^l(a) J^l on the twisted side-diagonal model.

    Scalars embed as a I = diag(a, sigma(a), ..., sigma^(n-1)(a)) and the
    right-hand side is the side-diagonal matrix of sigma^l(a) at offset l;
    the identity is checked for every l < n and a running over the basis.
    """
    if not 1 <= n <= 6:
        raise DomainError("matrix size n must be between 1 and 6")
    if twist.kind is not kind:
        raise KindMismatchError("twist acts on a different algebra")
    j = _side_diagonal(kind, twist, one(kind), 1, n)
    j_power = _side_diagonal(kind, twist, one(kind), 0, n)  # identity matrix
    for offset in range(n):
        for a in basis(kind):
            lhs = _matmul(kind, j_power, _side_diagonal(kind, twist, a, 0, n))
            rhs = _side_diagonal(kind, twist, apply_power(twist, offset, a), offset, n)
            if lhs != rhs:
                return False
        j_power = _matmul(kind, j_power, j)
    return True
