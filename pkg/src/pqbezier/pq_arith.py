"""Two-parameter integer arithmetic: brackets, factorials and binomials.

Everything here is a pure function of plain floats.  The bracket ``[n]`` is
always computed by its summation form so that p close to q (including the
classical case p = q = 1) costs no precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

# Above this degree the p**n powers leave the interesting range for any p
# meaningfully different from 1, so all operations refuse larger inputs.
MAX_DEGREE = 64


@dataclass(frozen=True)
class PQParams:
    """Shape-parameter pair (p, q); both entries must be positive and finite."""

    p: float
    q: float

    def __post_init__(self):
        object.__setattr__(self, "p", float(self.p))
        object.__setattr__(self, "q", float(self.q))
        for name in ("p", "q"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0.0:
                raise ValueError(f"shape parameter {name} must be positive and finite, got {value!r}")

    @property
    def ordered(self) -> bool:
        """True when p >= q; non-negativity and convex-hull guarantees need this."""
        return self.p >= self.q

    @property
    def ratio(self) -> float:
        """q / p, the contraction ratio appearing in the corner-cutting weights."""
        return self.q / self.p


def check_degree(n: int) -> None:
    """Reject degrees outside 0..MAX_DEGREE with a clear error."""
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds the supported maximum of {MAX_DEGREE}")


@lru_cache(maxsize=None)
def pq_integer(n: int, params: PQParams) -> float:
    """Bracket [n] = p^(n-1) + p^(n-2) q + ... + q^(n-1); [0] = 0.

    Equal to (p^n - q^n)/(p - q) for p != q, but the sum stays well defined
    and fully accurate as p approaches q.
    """
    check_degree(n)
    p, q = params.p, params.q
    return math.fsum(p ** (n - 1 - i) * q ** i for i in range(n))


@lru_cache(maxsize=None)
def pq_factorial(n: int, params: PQParams) -> float:
    """Bracket factorial [1][2]...[n]; [0]! = 1."""
    check_degree(n)
    out = 1.0
    for j in range(1, n + 1):
        out *= pq_integer(j, params)
    if math.isinf(out):
        raise OverflowError(f"bracket factorial of {n} overflows for p={params.p}, q={params.q}")
    return out


def pq_binomial(n: int, k: int, params: PQParams) -> float:
    """Bracket binomial [n]!/([k]![n-k]!); zero outside 0 <= k <= n.

    The out-of-range zero lets Pascal-style recurrences and tableau code run
    without edge-case branches.
    """
    check_degree(n)
    if k < 0 or k > n:
        return 0.0
    return pq_factorial(n, params) / (pq_factorial(k, params) * pq_factorial(n - k, params))


def pq_binomial_row(n: int, params: PQParams) -> list[float]:
    """All n+1 bracket binomials, built by the Pascal-style recurrence.

    Row m entry k satisfies row[k] = q^(m-k) * prev[k-1] + p^k * prev[k];
    the dual recurrence (p and q swapped in the weights) gives the same
    numbers and is exercised by the tests.
    """
    check_degree(n)
    p, q = params.p, params.q
    row = [1.0]
    for m in range(1, n + 1):
        prev = row
        row = []
        for k in range(m + 1):
            left = prev[k - 1] if k >= 1 else 0.0
            right = prev[k] if k <= m - 1 else 0.0
            row.append(q ** (m - k) * left + p ** k * right)
    return row


def one_minus_t_product(t: float, n: int, params: PQParams) -> float:
    """Product (1 - t)(p - q t)(p^2 - q^2 t)...(p^(n-1) - q^(n-1) t); 1 for n = 0."""
    check_degree(n)
    p, q = params.p, params.q
    out = 1.0
    pp = 1.0
    qq = 1.0
    for _ in range(n):
        out *= pp - qq * t
        pp *= p
        qq *= q
    return out


def one_minus_t_expansion(n: int, params: PQParams) -> list[float]:
    """Monomial coefficients c_0..c_n with sum_k c_k t^k == one_minus_t_product(t, n).

    c_k = (-1)^k p^((n-k)(n-k-1)/2) q^(k(k-1)/2) [n choose k].
    """
    check_degree(n)
    p, q = params.p, params.q
    coeffs = []
    for k in range(n + 1):
        magnitude = (
            p ** ((n - k) * (n - k - 1) // 2)
            * q ** (k * (k - 1) // 2)
            * pq_binomial(n, k, params)
        )
        coeffs.append(-magnitude if k % 2 else magnitude)
    return coeffs
