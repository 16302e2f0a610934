"""Counting bit patterns under linear and circular spacing constraints,
and the growth analysis of those counts.

kappa(a, b) counts length-b patterns whose ones are separated by at
least a zeros in the linear (non-wrapping) sense; it satisfies
kappa_b = kappa_{b-1} + kappa_{b-a-1} with kappa_b = b + 1 for
b <= a + 1.  tau(a, b) is the circular variant, obtained by exhaustive
enumeration, and is sandwiched by kappa(a, b - a) <= tau(a, b)
<= kappa(a, b).  The growth rate of both is the root gamma in (1, 2) of
z^(a+1) - z^a - 1, and delta = 1 / (gamma - 1) exceeds a^0.7 for
a >= 2, which makes the matrix column count grow superpolynomially in
the row count.
"""

from __future__ import annotations

import dataclasses
import math
from fractions import Fraction

from . import kernels
from .errors import ParameterError

MAX_KAPPA_B = 256
MAX_TAU_B = 30
_BISECT_TOL = 1e-12


def kappa(a: int, b: int) -> int:
    """Linear spacing count via the two-term recursion."""
    if a < 1:
        raise ParameterError("a must be at least 1")
    if not 0 <= b <= MAX_KAPPA_B:
        raise ParameterError(f"b must be in [0, {MAX_KAPPA_B}]")
    if b <= a + 1:
        return b + 1 if b >= 1 else 1
    values = [0] * (b + 1)
    values[0] = 1
    for t in range(1, b + 1):
        values[t] = t + 1 if t <= a + 1 else values[t - 1] + values[t - a - 1]
    return values[b]


def tau(a: int, b: int) -> int:
    """Circular spacing count by exhaustive enumeration."""
    if a < 1:
        raise ParameterError("a must be at least 1")
    if not 1 <= b <= MAX_TAU_B:
        raise ParameterError(f"b must be in [1, {MAX_TAU_B}]")
    return kernels.circular_spacing_count(a, b)


def gamma_root(a: int) -> float:
    """Root of z^(a+1) - z^a - 1 in (1, 2), by bisection to |f| <= 1e-12."""
    if a < 1:
        raise ParameterError("a must be at least 1")

    def f(z: float) -> float:
        return z ** a * (z - 1.0) - 1.0

    lo, hi = 1.0, 2.0
    mid = 1.5
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        val = f(mid)
        if abs(val) <= _BISECT_TOL:
            return mid
        if val < 0.0:
            lo = mid
        else:
            hi = mid
    return mid


_LEMMA_EXPONENT = 10  # substitution x = y^10 rationalizes the exponents


def _lemma_objective(x: float) -> float:
    return x ** 0.3 - 0.5 * x ** -0.4 - 0.7 * math.log(x)


def _lemma_root() -> float:
    # 3 y^7 - 7 y^4 + 2 has a root in (1, 2); its tenth power locates the
    # stationary point of the objective on x >= 1
    def f(y: float) -> float:
        return 3.0 * y ** 7 - 7.0 * y ** 4 + 2.0

    lo, hi = 1.0, 2.0
    mid = 1.5
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        val = f(mid)
        if abs(val) <= _BISECT_TOL:
            return mid
        if val < 0.0:
            lo = mid
        else:
            hi = mid
    return mid


@dataclasses.dataclass(frozen=True)
class DeltaBoundReport:
    """Certified comparison of delta = 1/(gamma-1) against a^0.7.

    The minimum of x^0.3 - 0.5 x^(-0.4) - 0.7 ln x over x >= 1 is
    positive (about 0.18 near x = 11.5), which yields
    ln delta > 0.7 ln a for every a >= 2; the report carries the
    numeric pieces of that argument.
    """

    a: int
    gamma: float
    delta: float
    threshold: float
    satisfied: bool
    objective_root: float
    objective_argmin: float
    objective_minimum: float


def delta_bound_check(a: int) -> DeltaBoundReport:
    """Evaluate delta = 1/(gamma-1) and compare against a^0.7."""
    if a < 2:
        raise ParameterError("the bound is stated for a >= 2")
    gamma = gamma_root(a)
    delta = 1.0 / (gamma - 1.0)
    threshold = a ** 0.7
    root = _lemma_root()
    argmin = root ** _LEMMA_EXPONENT
    minimum = _lemma_objective(argmin)
    return DeltaBoundReport(a, gamma, delta, threshold, delta > threshold,
                            root, argmin, minimum)


@dataclasses.dataclass(frozen=True)
class SpacingCountReport:
    """Linear and circular counts plus the growth constants for (a, b)."""

    a: int
    b: int
    kappa: int
    tau: int
    gamma: float
    delta: float
    delta_threshold: float


def spacing_count_report(a: int, b: int) -> SpacingCountReport:
    if a < 1:
        raise ParameterError("a must be at least 1")
    if not 1 <= b <= MAX_TAU_B:
        raise ParameterError(f"b must be in [1, {MAX_TAU_B}]")
    gamma = gamma_root(a)
    return SpacingCountReport(
        a=a, b=b, kappa=kappa(a, b), tau=tau(a, b), gamma=gamma,
        delta=1.0 / (gamma - 1.0),
        delta_threshold=a ** 0.7 if a >= 2 else float("nan"),
    )


@dataclasses.dataclass(frozen=True)
class ScalingReport:
    """How one (field_degree, spacing) construction scales.

    rows            2^field_degree - 1
    dimension       circular spacing count = parity-check degree
    cols            2^(dimension - 1), or rows when spacing == degree
    certified_order largest sparsity certified by coherence
    certified_source 'measured' when the matrix was built and certified,
                    'distance-bound' when derived from the code distance
    dimension_estimate  asymptotic lower-bound expression for the
                    dimension, printed for inspection only
    rows_estimate   asymptotic expression relating rows to the certified
                    order and column count; None when undefined
    """

    field_degree: int
    spacing: int
    rows: int
    dimension: int
    cols: int
    certified_order: int
    certified_source: str
    dimension_estimate: float
    rows_estimate: float | None


# build-and-measure limits for scaling_report; beyond these the report
# falls back to the distance bound
_MEASURE_MAX_COLS = 1 << 20
_MEASURE_MAX_ENTRIES = 1 << 27


def scaling_report(field_degree: int, spacing: int) -> ScalingReport:
    """Size and certified-order report for one parameter pair."""
    from . import analysis, bch

    spec = bch.build_code_spec(field_degree, spacing)
    rows = spec.length
    if spacing == field_degree:
        cols = rows
    else:
        cols = 1 << (spec.dimension - 1)
    if cols <= _MEASURE_MAX_COLS and rows * cols <= _MEASURE_MAX_ENTRIES:
        matrix = bch.assemble_bipolar_matrix(spec)
        certificate = analysis.coherence(matrix)
        order = certificate.rip_order_max
        source = "measured"
    else:
        bound, _ = analysis.coherence_bound_from_distance(
            rows, spec.min_distance_bound)
        if bound == 0:
            order = cols
        else:
            order = (bound.denominator - 1) // bound.numerator + 1
        source = "distance-bound"

    low = field_degree - spacing - 1
    inner = spacing  # field_degree - low - 1
    dimension_estimate = 2.0 ** ((low + 1) * math.log(inner) / inner) \
        if inner >= 1 else float("nan")
    log_cols = math.log2(cols)
    if order > 2 and log_cols > 0:
        exponent = math.log2(order) / math.log(math.log2(order))
        rows_estimate = order * log_cols ** exponent
    else:
        rows_estimate = None
    return ScalingReport(field_degree, spacing, rows, spec.dimension, cols,
                         order, source, dimension_estimate, rows_estimate)


def certified_order_from_bound(bound: Fraction, cols: int) -> int:
    """Largest k with (k - 1) * bound < 1, or cols when the bound is 0."""
    if bound < 0:
        raise ParameterError("bound must be non-negative")
    if bound == 0:
        return cols
    return (bound.denominator - 1) // bound.numerator + 1
