"""(p,q)-integers, binomials, and the (p,q)-Bernstein basis.

The (p,q)-integer is the two-parameter sum [n] = sum_{i<n} p^(n-1-i) q^i,
which stays finite at p = q (the ratio form (p^n - q^n)/(p - q) does not).
The basis function of degree n and index k is

    B_k^n(t) = p^(-n(n-1)/2) [n k] p^(k(k-1)/2) t^k prod_{s<n-k} (p^s - q^s t)

and the family sums to 1 for every t.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .scalars import PqParams, Point, Scalar, weighted_sum


def pq_integer(n: int, params: PqParams) -> Scalar:
    """[n]_{p,q} via the summation form; [0] = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p, q = params.p, params.q
    total = params.zero()
    for i in range(n):
        total += p ** (n - 1 - i) * q**i
    return total


def pq_factorial(n: int, params: PqParams) -> Scalar:
    """[n]! = [n][n-1]...[1], empty product for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = params.one()
    for j in range(2, n + 1):
        out *= pq_integer(j, params)
    return out


def _binomial_row(n: int, params: PqParams) -> list:
    """Row n of the (p,q)-Pascal triangle: [n k] = p^k [n-1 k] + q^(n-k) [n-1 k-1]."""
    p, q = params.p, params.q
    row = [params.one()]
    for m in range(1, n + 1):
        new = [row[0]]
        for k in range(1, m):
            new.append(p**k * row[k] + q ** (m - k) * row[k - 1])
        new.append(row[m - 1])
        row = new
    return row


def pq_binomial(n: int, k: int, params: PqParams) -> Scalar:
    """(p,q)-binomial coefficient; 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return params.zero()
    return _binomial_row(n, params)[k]


def pq_one_minus_pow(t: Scalar, m: int, params: PqParams) -> Scalar:
    """(1-t)^m_{p,q} = prod_{s=0}^{m-1} (p^s - q^s t); empty product is 1."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    p, q = params.p, params.q
    t = params.coerce(t)
    out = params.one()
    for s in range(m):
        out *= p**s - q**s * t
    return out


def pq_expansion_coefficients(m: int, params: PqParams) -> list:
    """Coefficients e_0..e_m with (1-t)^m_{p,q} = sum_k e_k t^k.

    e_k = (-1)^k p^((m-k)(m-k-1)/2) q^(k(k-1)/2) [m k].
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    p, q = params.p, params.q
    row = _binomial_row(m, params)
    out = []
    for k in range(m + 1):
        sign = -1 if k % 2 else 1
        e = sign * p ** ((m - k) * (m - k - 1) // 2) * q ** (k * (k - 1) // 2) * row[k]
        out.append(e)
    return out


@dataclass(frozen=True)
class BasisValueVector:
    """All n+1 basis values at one parameter value."""

    degree: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.degree + 1:
            raise ValueError("need degree+1 values")

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]


def bernstein_basis(n: int, k: int, t, params: PqParams) -> Scalar:
    """B_k^n(t; p, q).  k outside 0..n is an error."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if k < 0 or k > n:
        raise ValueError(f"basis index {k} outside 0..{n}")
    p = params.p
    t = params.coerce(t)
    norm = p ** (-(n * (n - 1) // 2))
    return (
        norm
        * pq_binomial(n, k, params)
        * p ** (k * (k - 1) // 2)
        * t**k
        * pq_one_minus_pow(t, n - k, params)
    )


def bernstein_basis_all(n: int, t, params: PqParams) -> BasisValueVector:
    """All basis values at t, sharing the binomial row and product prefixes."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    p, q = params.p, params.q
    t = params.coerce(t)
    row = _binomial_row(n, params)
    # prefix[m] = (1-t)^m_{p,q}
    prefix = [params.one()]
    for s in range(n):
        prefix.append(prefix[-1] * (p**s - q**s * t))
    norm = p ** (-(n * (n - 1) // 2))
    values = []
    t_pow = params.one()
    for k in range(n + 1):
        values.append(norm * row[k] * p ** (k * (k - 1) // 2) * t_pow * prefix[n - k])
        t_pow *= t
    return BasisValueVector(n, tuple(values))


def operator_nodes(n: int, params: PqParams) -> list:
    """Sample nodes [k]/(p^(k-n) [n]) = p^(n-k) [k]/[n] for k = 0..n."""
    if n < 1:
        raise ValueError("operator degree must be >= 1")
    p = params.p
    denom = pq_integer(n, params)
    return [p ** (n - k) * pq_integer(k, params) / denom for k in range(n + 1)]


def bernstein_operator(f_samples: Sequence[Point], n: int, x, params: PqParams) -> Point:
    """Weighted sum sum_k B_k^n(x) f_samples[k].

    f_samples[k] must hold f evaluated at the k-th operator node
    (see operator_nodes); the operator reproduces constants exactly.
    """
    if n < 1:
        raise ValueError("operator degree must be >= 1")
    if len(f_samples) != n + 1:
        raise ValueError(f"need {n + 1} samples, got {len(f_samples)}")
    values = bernstein_basis_all(n, x, params)
    return weighted_sum(values.values, list(f_samples), params)
