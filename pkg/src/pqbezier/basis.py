"""Two-parameter Bernstein-type basis functions and their degree identities.

The direct product definition implemented by :func:`basis_value` is the ground
truth for this module: it is the form pinned down by the partition-of-unity
property.  Every reduction and elevation identity here is written in a
*normalized* form that reproduces that definition on a grid.  Each identity
also circulates in an *unnormalized* variant that differs from the normalized
one by a pure power of p (and therefore silently agrees whenever p = 1);
:func:`identity_audit` measures both forms and fits that power so the
normalization cannot drift without a test noticing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .pq_arith import PQParams, check_degree, one_minus_t_product, pq_binomial, pq_integer

#: Residual a normalized identity must meet on the audit grid.
AUDIT_TOLERANCE = 1e-10

#: Default parameter pairs exercised by the audit.
DEFAULT_AUDIT_PARAMS = (
    PQParams(1.0, 1.0),
    PQParams(1.0, 0.5),
    PQParams(0.8, 0.5),
    PQParams(1.2, 1.1),
    PQParams(2.0, 1.0),
)


def basis_value(k: int, n: int, t: float, params: PQParams) -> float:
    """Value of the degree-n basis function with index k at parameter t.

    Returns 0 outside 0 <= k <= n.  The values at t = 0 and t = 1 are exact
    unit-vector entries for every admissible (p, q); the boundary shortcut
    makes that bit-exact rather than merely close.

    The p-power prefactor is assembled as a single exponent
    k(k-1)/2 - n(n-1)/2 before exponentiation, and the factors are multiplied
    left to right with no reassociation, so results are reproducible run to
    run on one platform.
    """
    check_degree(n)
    if k < 0 or k > n:
        return 0.0
    if t == 0.0:
        return 1.0 if k == 0 else 0.0
    if t == 1.0:
        return 1.0 if k == n else 0.0
    exponent = k * (k - 1) // 2 - n * (n - 1) // 2
    value = pq_binomial(n, k, params) * params.p ** exponent
    value *= t ** k
    value *= one_minus_t_product(t, n - k, params)
    return value


def basis_row(n: int, t: float, params: PQParams) -> list[float]:
    """All n+1 basis values at t; they sum to 1 for every t."""
    check_degree(n)
    return [basis_value(k, n, t, params) for k in range(n + 1)]


def reduce_step_a(k: int, n: int, t: float, params: PQParams, lower: tuple[float, float]) -> float:
    """Degree-n basis value from the degree-(n-1) pair, first reduction form.

    ``lower`` supplies (value at index k-1, value at index k) of degree n-1,
    with the usual zero convention outside range.  Normalized so the result
    equals :func:`basis_value`(k, n, t); the unnormalized variant of this
    identity is larger by p^(n-1).
    """
    if n < 1:
        raise ValueError("reduction needs degree n >= 1")
    left, right = lower
    p, q = params.p, params.q
    w_left = q ** (n - k) * p ** (k - n) * t
    w_right = 1.0 - p ** (k - n + 1) * q ** (n - k - 1) * t
    return w_left * left + w_right * right


def reduce_step_b(k: int, n: int, t: float, params: PQParams, lower: tuple[float, float]) -> float:
    """Degree-n basis value from the degree-(n-1) pair, second reduction form.

    Same contract as :func:`reduce_step_a`; here the left parent carries the
    plain weight t and the right parent the ratio-powered complement.
    """
    if n < 1:
        raise ValueError("reduction needs degree n >= 1")
    left, right = lower
    ratio = params.ratio
    w_right = ratio ** k - ratio ** (n - 1) * t
    return t * left + w_right * right


def elevation_coeffs(k: int, n: int, params: PQParams) -> tuple[float, float]:
    """Weights (alpha, beta) with B(k, n) = alpha * B(k, n+1) + beta * B(k+1, n+1).

    alpha = p^k [n+1-k]/[n+1] and beta = 1 - p^(k+1) [n-k]/[n+1], which also
    equals q^(n-k) [k+1]/[n+1].  Both lie in [0, 1] whenever p >= q, and the
    pairing is affine across rows: alpha_j + beta_(j-1) = 1.
    """
    if not 0 <= k <= n:
        raise ValueError(f"index {k} outside 0..{n}")
    check_degree(n + 1)
    denom = pq_integer(n + 1, params)
    alpha = params.p ** k * pq_integer(n + 1 - k, params) / denom
    beta = 1.0 - params.p ** (k + 1) * pq_integer(n - k, params) / denom
    return alpha, beta


@dataclass(frozen=True)
class FactorFit:
    """Fitted ratio between the unnormalized and normalized form of one identity."""

    n: int
    p: float
    q: float
    factor: float

    def to_dict(self) -> dict:
        return {"n": self.n, "p": self.p, "q": self.q, "factor": self.factor}


@dataclass
class AuditReport:
    """Outcome of checking one identity on the audit grid.

    ``normalized_residual`` is the largest absolute defect of the normalized
    form (must stay below :data:`AUDIT_TOLERANCE` or the report is FAILED);
    ``unnormalized_residual`` is the same for the unnormalized variant.  The
    fitted factors record, per degree and parameter pair, the power of p
    separating the two variants; ``factor_law`` names that power
    ("p^(n-1)", "p^n" or "1").  ``direction`` says which way the unnormalized
    form deviates: "high" means it overshoots the true value, "low" that it
    undershoots.
    """

    identity: str
    description: str
    normalized_residual: float
    unnormalized_residual: float
    factor_law: str
    direction: str
    grid: str
    factor_fits: list[FactorFit] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.normalized_residual <= AUDIT_TOLERANCE

    @property
    def status(self) -> str:
        return "OK" if self.passed else "FAILED"

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "description": self.description,
            "status": self.status,
            "normalized_residual": self.normalized_residual,
            "unnormalized_residual": self.unnormalized_residual,
            "factor_law": self.factor_law,
            "direction": self.direction,
            "grid": self.grid,
            "factor_fits": [fit.to_dict() for fit in self.factor_fits],
        }


def _median(values: list[float]) -> float:
    ordered = sorted(values)
    mid = len(ordered) // 2
    if len(ordered) % 2:
        return ordered[mid]
    return 0.5 * (ordered[mid - 1] + ordered[mid])


def _fit_law(fits: list[FactorFit]) -> str:
    """Name the fitted factors as a power of p in the degree, if they are one."""
    offsets = []
    for fit in fits:
        if fit.p == 1.0 or fit.factor <= 0.0:
            continue
        exponent = math.log(fit.factor) / math.log(fit.p)
        offsets.append(exponent - fit.n)
    if not offsets:
        return "1"
    mean = sum(offsets) / len(offsets)
    shift = round(mean)
    if any(abs(off - shift) > 1e-6 for off in offsets):
        return "mixed"
    if shift == 0:
        return "p^n"
    return f"p^(n{shift:+d})"


def _reduction_samples(form, k, n, t, params):
    """(true, normalized, unnormalized) for one reduction identity sample."""
    p, q = params.p, params.q
    left = basis_value(k - 1, n - 1, t, params)
    right = basis_value(k, n - 1, t, params)
    true = basis_value(k, n, t, params)
    if form == "a":
        normalized = reduce_step_a(k, n, t, params, (left, right))
        unnormalized = (
            q ** (n - k) * p ** (k - 1) * t * left
            + (p ** (n - 1) - p ** k * q ** (n - k - 1) * t) * right
        )
    else:
        normalized = reduce_step_b(k, n, t, params, (left, right))
        unnormalized = (
            p ** (n - 1) * t * left
            + (q ** k * p ** (n - k - 1) - q ** (n - 1) * t) * right
        )
    return true, normalized, unnormalized


def _elevation_samples(which, k, n, t, params):
    """(lhs, normalized rhs, unnormalized rhs) for one elevation identity sample."""
    p, q = params.p, params.q
    denom = pq_integer(n + 1, params)
    if which == "shift":
        lhs = q ** (n - k) * p ** k * t * basis_value(k, n, t, params)
        coeff = 1.0 - p ** (k + 1) * pq_integer(n - k, params) / denom
        target = basis_value(k + 1, n + 1, t, params)
        return lhs, p ** n * coeff * target, coeff * target
    if which == "keep":
        lhs = (p ** n - p ** k * q ** (n - k) * t) * basis_value(k, n, t, params)
        coeff = p ** k * pq_integer(n + 1 - k, params) / denom
        target = basis_value(k, n + 1, t, params)
        return lhs, p ** n * coeff * target, coeff * target
    # two-term pairing
    lhs = basis_value(k, n, t, params)
    alpha, beta = elevation_coeffs(k, n, params)
    lo = basis_value(k, n + 1, t, params)
    hi = basis_value(k + 1, n + 1, t, params)
    normalized = alpha * lo + beta * hi
    unnormalized = p ** (k - n) * (pq_integer(n + 1 - k, params) / denom) * lo + p ** (-n) * (
        1.0 - p ** (k + 1) * pq_integer(n - k, params) / denom
    ) * hi
    return lhs, normalized, unnormalized


_IDENTITIES = (
    ("reduction-a", "two-term degree reduction, ratio-weighted left parent", "high"),
    ("reduction-b", "two-term degree reduction, plain-t left parent", "high"),
    ("elevation-shift", "t-weighted raise onto the shifted higher-degree index", "low"),
    ("elevation-keep", "complement raise onto the same higher-degree index", "low"),
    ("elevation-pair", "two-term decomposition into the next degree", "low"),
)


def identity_audit(
    n_max: int = 8,
    params_set: tuple[PQParams, ...] = DEFAULT_AUDIT_PARAMS,
    t_grid: tuple[float, ...] | None = None,
) -> list[AuditReport]:
    """Check all degree identities against the direct definition.

    For every identity, degree, parameter pair and grid parameter this
    evaluates the normalized form (recording its worst absolute residual
    against the direct definition) and the unnormalized variant, then fits
    the power-of-p factor separating the two.  A report whose normalized
    residual exceeds :data:`AUDIT_TOLERANCE` is marked FAILED, which signals
    an implementation bug rather than a property of the inputs.
    """
    check_degree(n_max)
    if n_max < 1:
        raise ValueError("audit needs n_max >= 1")
    if t_grid is None:
        t_grid = tuple(i / 32 for i in range(33))
    if not params_set or not t_grid:
        raise ValueError("audit grids must be nonempty")

    grid_note = (
        f"n<=({n_max}), params={[(prm.p, prm.q) for prm in params_set]}, {len(t_grid)} t-samples"
    )
    reports = []
    for identity, description, direction in _IDENTITIES:
        worst_norm = 0.0
        worst_raw = 0.0
        fits = []
        for params in params_set:
            if identity.startswith("reduction"):
                degrees = range(1, n_max + 1)
            else:
                degrees = range(0, n_max)
            for n in degrees:
                ratios = []
                for k in range(n + 1):
                    for t in t_grid:
                        if identity == "reduction-a":
                            true, norm, raw = _reduction_samples("a", k, n, t, params)
                        elif identity == "reduction-b":
                            true, norm, raw = _reduction_samples("b", k, n, t, params)
                        elif identity == "elevation-shift":
                            true, norm, raw = _elevation_samples("shift", k, n, t, params)
                        elif identity == "elevation-keep":
                            true, norm, raw = _elevation_samples("keep", k, n, t, params)
                        else:
                            true, norm, raw = _elevation_samples("pair", k, n, t, params)
                        worst_norm = max(worst_norm, abs(true - norm))
                        worst_raw = max(worst_raw, abs(true - raw))
                        # Fit orientation isolates the omitted power of p:
                        # "high" variants overshoot the truth, "low" undershoot.
                        if direction == "high" and abs(norm) > 1e-12:
                            ratios.append(raw / norm)
                        elif direction == "low" and abs(raw) > 1e-12:
                            ratios.append(true / raw)
                if ratios:
                    fits.append(FactorFit(n=n, p=params.p, q=params.q, factor=_median(ratios)))
        reports.append(
            AuditReport(
                identity=identity,
                description=description,
                normalized_residual=worst_norm,
                unnormalized_residual=worst_raw,
                factor_law=_fit_law(fits),
                direction=direction,
                grid=grid_note,
                factor_fits=fits,
            )
        )
    return reports


def format_audit_table(reports: list[AuditReport]) -> str:
    """Human-readable audit summary, one line per identity."""
    headers = ("identity", "normalized", "unnormalized", "factor", "side", "status")
    rows = [
        (
            rep.identity,
            f"{rep.normalized_residual:.3e}",
            f"{rep.unnormalized_residual:.3e}",
            rep.factor_law,
            rep.direction,
            rep.status,
        )
        for rep in reports
    ]
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers))]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
    return "\n".join(lines)
