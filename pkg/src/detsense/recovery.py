"""Sparse recovery by orthogonal matching pursuit, with a fast
correlation path for matrices whose columns form circular-shift groups.

The fast path computes all inner products of the residual against a
shift group in one pass: with c = IDFT(conj(DFT(r)) * DFT(base)), the
inner product against the member at rotation offset j is c[j].  Both
paths feed the same selection rule, including an explicit tie
adjudication step so that their index traces agree even when floating
point rounding differs between FFT and direct dot products.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np
import scipy.linalg

from .analysis import ShiftGroupPartition, shift_group_partition
from .errors import InvariantError, ParameterError
from .matrix import RealMatrix, SensingMatrix, as_unit_columns

# relative window inside which competing correlation magnitudes are
# re-adjudicated with exact direct dot products
_TIE_RTOL = 1e-8

# reconstruction counts as success at or above this output SNR
SUCCESS_SNR_DB = 100.0


@dataclasses.dataclass(frozen=True)
class SparseSignal:
    """A length-n vector given by its support and values."""

    n: int
    support: tuple
    values: np.ndarray

    def __init__(self, n: int, support, values):
        support = tuple(int(t) for t in support)
        values = np.asarray(values, dtype=np.float64)
        if values.ndim != 1 or values.size != len(support):
            raise ParameterError("values must align with the support")
        if any(not 0 <= t < n for t in support):
            raise ParameterError("support index out of range")
        if len(set(support)) != len(support):
            raise ParameterError("support indices must be distinct")
        if tuple(sorted(support)) != support:
            raise ParameterError("support must be sorted ascending")
        values = values.copy()
        values.setflags(write=False)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "values", values)

    @property
    def sparsity(self) -> int:
        return len(self.support)

    def to_dense(self) -> np.ndarray:
        out = np.zeros(self.n)
        if self.support:
            out[list(self.support)] = self.values
        return out


@dataclasses.dataclass(frozen=True)
class OmpTrace:
    """Everything one OMP run decided, in order."""

    selected: tuple
    residual_norm_squares: tuple
    estimate: SparseSignal
    correlation_path: str


@dataclasses.dataclass(frozen=True)
class ExperimentResult:
    """One sweep: axis points, one aggregated value per point."""

    axis: tuple
    values: tuple
    metric: str
    trials: int
    seed: int


def measure(matrix, signal: SparseSignal) -> np.ndarray:
    """y = sum over the support of value_i times unit column i."""
    columns = as_unit_columns(matrix)
    if signal.n != columns.shape[1]:
        raise ParameterError("signal length does not match the column count")
    if not signal.support:
        return np.zeros(columns.shape[0])
    return columns[:, list(signal.support)] @ signal.values


def circular_cross_correlation(r, a) -> np.ndarray:
    """c[j] = sum_t r[t] * a[(t + j) mod m], all j at once via the DFT."""
    r = np.asarray(r, dtype=np.float64)
    a = np.asarray(a, dtype=np.float64)
    if r.ndim != 1 or a.ndim != 1 or r.size != a.size:
        raise ParameterError("need two equal-length 1-d vectors")
    return np.fft.ifft(np.conj(np.fft.fft(r)) * np.fft.fft(a)).real


class _FastCorrelator:
    """Per-group spectra cached for repeated residual correlations."""

    def __init__(self, matrix, partition: ShiftGroupPartition):
        columns_norm = None
        if isinstance(matrix, SensingMatrix):
            columns_norm = np.sqrt(matrix.norm_squares.astype(np.float64))
        self.n = (matrix.cols if isinstance(matrix, (SensingMatrix, RealMatrix))
                  else np.asarray(matrix).shape[1])
        if partition.rows != (matrix.rows if isinstance(
                matrix, (SensingMatrix, RealMatrix))
                else np.asarray(matrix).shape[0]):
            raise ParameterError("partition does not match the matrix rows")
        self.plan = []
        for group in partition.groups:
            members = np.asarray(group.members, dtype=np.intp)
            offsets = np.asarray(group.offsets, dtype=np.intp)
            spectrum = np.fft.fft(group.base.astype(np.float64))
            if columns_norm is not None:
                scale = 1.0 / columns_norm[members]
            else:
                scale = np.ones(members.size)
            self.plan.append((members, offsets, spectrum, scale))
        total = sum(len(p[0]) for p in self.plan)
        if total != self.n:
            raise ParameterError("partition does not cover every column")

    def __call__(self, residual: np.ndarray) -> np.ndarray:
        out = np.empty(self.n)
        spectrum_r = np.conj(np.fft.fft(residual))
        for members, offsets, spectrum, scale in self.plan:
            c = np.fft.ifft(spectrum_r * spectrum).real
            out[members] = c[offsets] * scale
        return out


def correlate_all(matrix, partition, residual, fast: bool = False) -> np.ndarray:
    """Inner products of the residual with every unit column.

    fast=False multiplies against the dense unit-column matrix;
    fast=True walks the shift groups with one FFT product per group.
    Both return the same vector up to rounding.
    """
    residual = np.asarray(residual, dtype=np.float64)
    if not fast:
        return as_unit_columns(matrix).T @ residual
    if partition is None:
        raise ParameterError("the fast path needs a shift group partition")
    return _FastCorrelator(matrix, partition)(residual)


def omp(matrix, partition, y, k: int, fast: bool = False) -> OmpTrace:
    """Orthogonal matching pursuit for exactly k iterations.

    Each iteration appends the unselected column of largest absolute
    correlation with the residual, then re-solves least squares on the
    selected set via the normal equations.  Near-ties (within a 1e-8
    relative window) are resolved by recomputed direct dot products,
    lowest index winning, so fast and direct runs select identically.
    """
    columns = as_unit_columns(matrix)
    m, n = columns.shape
    y = np.asarray(y, dtype=np.float64)
    if y.shape != (m,):
        raise ParameterError("y must have one entry per matrix row")
    if not 0 <= k <= m:
        raise ParameterError("need 0 <= k <= row count")
    if k > n:
        raise ParameterError("k exceeds the column count")
    if fast:
        if partition is None:
            partition = shift_group_partition(matrix)
        correlator = _FastCorrelator(matrix, partition)
    else:
        correlator = lambda r: columns.T @ r  # noqa: E731

    selected: list = []
    available = np.ones(n, dtype=bool)
    residual = y.copy()
    norm_squares = []
    solution = np.zeros(0)
    for _ in range(k):
        corr = correlator(residual)
        magnitude = np.abs(corr)
        masked = np.where(available, magnitude, -1.0)
        cmax = masked.max()
        window = _TIE_RTOL * max(cmax, 0.0)
        candidates = np.flatnonzero(available & (magnitude >= cmax - window))
        if candidates.size == 1:
            pick = int(candidates[0])
        else:
            exact = columns[:, candidates].T @ residual
            pick = int(candidates[int(np.argmax(np.abs(exact)))])
        selected.append(pick)
        available[pick] = False
        active = columns[:, selected]
        gram = active.T @ active
        rhs = active.T @ y
        try:
            factor = scipy.linalg.cho_factor(gram)
            solution = scipy.linalg.cho_solve(factor, rhs)
        except scipy.linalg.LinAlgError as exc:
            raise InvariantError(
                "active set became rank deficient (duplicate columns?)"
            ) from exc
        residual = y - active @ solution
        norm_squares.append(float(residual @ residual))

    order = np.argsort(selected)
    support = tuple(selected[int(t)] for t in order)
    values = solution[order] if len(selected) else np.zeros(0)
    estimate = SparseSignal(n, support, values)
    return OmpTrace(tuple(selected), tuple(norm_squares), estimate,
                    "circulant-fast" if fast else "direct")


def reconstruction_snr_db(reference: np.ndarray, estimate: np.ndarray) -> float:
    """10 log10(|x|^2 / |x - xhat|^2); +inf on exact recovery."""
    reference = np.asarray(reference, dtype=np.float64)
    estimate = np.asarray(estimate, dtype=np.float64)
    err = float(((reference - estimate) ** 2).sum())
    sig = float((reference ** 2).sum())
    if err == 0.0:
        return math.inf
    if sig == 0.0:
        return -math.inf
    return 10.0 * math.log10(sig / err)


def _trial_rng(seed: int, *key) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=key))


def _random_signal(rng: np.random.Generator, n: int, k: int) -> SparseSignal:
    support = np.sort(rng.choice(n, size=k, replace=False))
    values = rng.standard_normal(k)
    return SparseSignal(n, tuple(int(t) for t in support), values)


def recovery_sweep(matrix, partition, k_values, trials: int, seed: int,
                   fast: bool = False) -> ExperimentResult:
    """Noiseless success rate over random sparse signals, one per trial.

    Trial (k, t) draws its own substream from (seed, k, t), so any
    point of the sweep can be reproduced independently.  Success is
    reconstruction SNR at or above SUCCESS_SNR_DB.
    """
    if trials < 1:
        raise ParameterError("trials must be positive")
    columns = as_unit_columns(matrix)
    n = columns.shape[1]
    k_values = [int(k) for k in k_values]
    if fast and partition is None:
        partition = shift_group_partition(matrix)
    rates = []
    for k in k_values:
        if not 1 <= k <= min(columns.shape[0], n):
            raise ParameterError(f"sparsity {k} out of range")
        hits = 0
        for t in range(trials):
            rng = _trial_rng(seed, k, t)
            signal = _random_signal(rng, n, k)
            y = columns[:, list(signal.support)] @ signal.values
            trace = omp(columns if not fast else matrix, partition, y, k,
                        fast=fast)
            snr = reconstruction_snr_db(signal.to_dense(),
                                        trace.estimate.to_dense())
            if snr >= SUCCESS_SNR_DB:
                hits += 1
        rates.append(hits / trials)
    return ExperimentResult(tuple(k_values), tuple(rates), "success_rate",
                            trials, seed)


def noise_sweep(matrix, partition, k: int, noise_levels_db, trials: int,
                seed: int, fast: bool = False) -> ExperimentResult:
    """Mean output SNR at fixed sparsity across input noise levels.

    Each trial draws a k-sparse signal, forms y, then adds white
    Gaussian noise scaled so 10 log10(|y|^2 / |w|^2) equals the level
    (math.inf levels add nothing).  Substreams are keyed by
    (level index, trial).
    """
    if trials < 1:
        raise ParameterError("trials must be positive")
    columns = as_unit_columns(matrix)
    m, n = columns.shape
    if not 1 <= k <= min(m, n):
        raise ParameterError(f"sparsity {k} out of range")
    if fast and partition is None:
        partition = shift_group_partition(matrix)
    levels = [float(level) for level in noise_levels_db]
    means = []
    for idx, level in enumerate(levels):
        total = 0.0
        for t in range(trials):
            rng = _trial_rng(seed, idx, t)
            signal = _random_signal(rng, n, k)
            y = columns[:, list(signal.support)] @ signal.values
            if math.isfinite(level):
                noise = rng.standard_normal(m)
                target = float(y @ y) * 10.0 ** (-level / 10.0)
                scale = math.sqrt(target / float(noise @ noise))
                y = y + noise * scale
            trace = omp(columns if not fast else matrix, partition, y, k,
                        fast=fast)
            snr = reconstruction_snr_db(signal.to_dense(),
                                        trace.estimate.to_dense())
            total += min(snr, 300.0)  # cap exact recoveries for a finite mean
        means.append(total / trials)
    return ExperimentResult(tuple(levels), tuple(means), "mean_snr_db",
                            trials, seed)


def gaussian_baseline(m: int, n: int, seed: int) -> RealMatrix:
    """Random matrix with unit-normalized standard normal columns."""
    if m < 1 or n < 1:
        raise ParameterError("dimensions must be positive")
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    entries = rng.standard_normal((m, n))
    norms = np.sqrt((entries * entries).sum(axis=0))
    if np.any(norms == 0):
        raise InvariantError("degenerate zero column drawn")
    entries /= norms
    return RealMatrix(entries, {"family": "gaussian", "m": m, "n": n,
                                "seed": seed})


@dataclasses.dataclass(frozen=True)
class CorrelationCost:
    """Multiplication counts for one full correlation pass.

    direct_multiplications:   sum over groups of period * rows
    transform_multiplications: per-group DFT + IDFT + pointwise product,
                               4 * period * ceil(log2 period) + period
    residual_transform:        one shared rows-point DFT of the residual,
                               2 * rows * ceil(log2 rows)
    """

    rows: int
    direct_multiplications: int
    transform_multiplications: int
    residual_transform: int

    @property
    def fast_total(self) -> int:
        return self.transform_multiplications + self.residual_transform

    @property
    def ratio(self) -> float:
        return self.direct_multiplications / self.fast_total


def correlation_cost(rows: int, periods) -> CorrelationCost:
    """Cost model comparing direct and transform correlation passes."""
    if rows < 1:
        raise ParameterError("rows must be positive")
    direct = 0
    transform = 0
    for period in periods:
        period = int(period)
        if not 1 <= period <= rows:
            raise ParameterError("period out of range")
        direct += period * rows
        log_term = math.ceil(math.log2(period)) if period > 1 else 0
        transform += 4 * period * log_term + period
    residual = 2 * rows * math.ceil(math.log2(rows)) if rows > 1 else 0
    return CorrelationCost(rows, direct, transform, residual)
