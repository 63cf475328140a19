"""The (p,q)-blossom: the symmetric multiaffine form of a polynomial.

A degree-n polynomial S(t) = sum a_k t^k has a unique symmetric multiaffine
form s(u_1, ..., u_n) that recovers S on the diagonal
(p^(n-1) t, p^(n-2) q t, ..., q^(n-1) t).  Writing phi_{n,k} for the k-th
elementary symmetric polynomial, the form is

    s(u) = sum_k (a_k / phi_{n,k}(diagonal at t=1)) phi_{n,k}(u),

so it exists iff every denominator phi_{n,k}(p^(n-1), ..., q^(n-1)) is
nonzero.  validate_params applies the standard restrictions that guarantee
this regime for the operators built on top.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .scalars import (
    Point,
    PqParams,
    Scalar,
    add,
    coerce_point,
    scale,
    weighted_sum,
)


@dataclass(frozen=True)
class ParameterValidity:
    """Outcome of the standard (p,q) restrictions for a given degree."""

    ok: bool
    violated_conditions: tuple

    def __post_init__(self):
        if self.ok != (len(self.violated_conditions) == 0):
            raise ValueError("ok must mirror an empty violation list")


class BlossomUndefinedError(ValueError):
    """Raised when the blossom denominators vanish for the given (p,q,n)."""

    def __init__(self, validity: ParameterValidity):
        self.validity = validity
        tags = ", ".join(validity.violated_conditions)
        super().__init__(f"blossom undefined for these parameters: {tags}")


def validate_params(n: int, params: PqParams) -> ParameterValidity:
    """Check the standard restrictions for degree n.

    For n > 1: q must be nonzero, p must differ from q, p must be nonzero,
    and for even n additionally q != -p.  Degrees 0 and 1 are unrestricted.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    p, q = params.p, params.q
    tags = []
    if n > 1:
        if q == 0:
            tags.append("q_zero")
        if p == 0:
            # not part of the usual restriction lists, but phi_{n,k} vanishes
            # for k >= 2 when p = 0, so the form would divide by zero
            tags.append("p_zero")
        if p == q:
            tags.append("p_eq_q")
        if n % 2 == 0 and q == -p:
            tags.append("p_eq_minus_q_even_n")
    return ParameterValidity(not tags, tuple(tags))


def elementary_symmetric_all(values: Sequence[Scalar], params: PqParams) -> list:
    """e_0..e_m of the given values by the Pascal-style DP recurrence."""
    m = len(values)
    e = [params.one()] + [params.zero()] * m
    for v in values:
        for j in range(m, 0, -1):
            e[j] = e[j] + v * e[j - 1]
    return e


def elementary_symmetric(values: Sequence[Scalar], k: int, params: PqParams) -> Scalar:
    """phi_k of the values; 0 for k outside 0..len(values)."""
    if k < 0 or k > len(values):
        return params.zero()
    values = [params.coerce(v) for v in values]
    return elementary_symmetric_all(values, params)[k]


def diagonal_points(n: int, params: PqParams) -> list:
    """The evaluation diagonal at t=1: (p^(n-1), p^(n-2) q, ..., q^(n-1))."""
    p, q = params.p, params.q
    return [p ** (n - 1 - j) * q**j for j in range(n)]


@dataclass(frozen=True)
class Polynomial:
    """Coefficients a_0..a_n in the monomial basis; entries may be points."""

    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) == 0:
            raise ValueError("need at least the constant coefficient")
        object.__setattr__(self, "coefficients", tuple(self.coefficients))

    @property
    def degree_bound(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, t: Scalar) -> Point:
        acc = self.coefficients[0]
        power = 1
        for a in self.coefficients[1:]:
            power = power * t
            acc = add(acc, scale(power, a))
        return acc


@dataclass(frozen=True)
class BlossomForm:
    """Blossom coefficients c_k against the elementary symmetric basis."""

    degree: int
    params: PqParams
    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) != self.degree + 1:
            raise ValueError("need degree+1 coefficients")


def blossom_from_polynomial(poly: Polynomial, params: PqParams) -> BlossomForm:
    """Divide each monomial coefficient by phi_{n,k} of the diagonal."""
    n = poly.degree_bound
    validity = validate_params(n, params)
    if not validity.ok:
        raise BlossomUndefinedError(validity)
    denoms = elementary_symmetric_all(diagonal_points(n, params), params)
    coeffs = []
    for k in range(n + 1):
        a_k = coerce_point(poly.coefficients[k], params)
        coeffs.append(scale(1 / denoms[k], a_k))
    return BlossomForm(n, params, tuple(coeffs))


def blossom_evaluate(form: BlossomForm, u: Sequence[Scalar]) -> Point:
    """s(u_1, ..., u_n) = sum_k c_k phi_{n,k}(u)."""
    if len(u) != form.degree:
        raise ValueError(f"need {form.degree} arguments, got {len(u)}")
    params = form.params
    values = [params.coerce(v) for v in u]
    phis = elementary_symmetric_all(values, params)
    return weighted_sum(phis, list(form.coefficients), params)


def dual_control_points(form: BlossomForm) -> list:
    """Control points P_k = s(0, ..., 0, p^(n-1), ..., p^(n-k) q^(k-1)).

    The argument list is the length-k prefix of the diagonal padded in front
    with n-k zeros.
    """
    n = form.degree
    params = form.params
    diag = diagonal_points(n, params)
    zero = params.zero()
    points = []
    for k in range(n + 1):
        u = [zero] * (n - k) + diag[:k]
        points.append(blossom_evaluate(form, u))
    return points


def recursive_blossom_evaluate(
    control_points: Sequence[Point], u: Sequence[Scalar], params: PqParams
) -> Point:
    """Triangular blossom recurrence over the control points.

    Level k+1 blends neighbours with weights (1 - w, w), w = u_{k+1} (p/q)^i.
    The apex equals the closed-form blossom evaluated at arguments scaled by
    p^(n-1): Q(u_1, ..., u_n) = s(p^(n-1) u_1, ..., p^(n-1) u_n); at p = 1 it
    is the blossom itself.
    """
    n = len(control_points) - 1
    if n < 0:
        raise ValueError("need at least one control point")
    if len(u) != n:
        raise ValueError(f"need {n} arguments, got {len(u)}")
    if params.q == 0:
        raise ValueError("q must be nonzero")
    ratio = params.p / params.q
    current = [coerce_point(pt, params) for pt in control_points]
    args = [params.coerce(v) for v in u]
    for k in range(n):
        weight = args[k]  # u_{k+1} * (p/q)^0
        nxt = []
        for i in range(len(current) - 1):
            nxt.append(add(scale(1 - weight, current[i]), scale(weight, current[i + 1])))
            weight = weight * ratio
        current = nxt
    return current[0]
