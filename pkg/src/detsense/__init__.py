"""Deterministic sensing matrices over tiny alphabets, exact coherence
certification, and sparse recovery by matching pursuit."""

from .analysis import (CoherenceCertificate, ShiftGroup, ShiftGroupPartition,
                       coherence, coherence_bound_from_distance,
                       shift_group_partition)
from .bch import (BchCodeSpec, SpacingSequenceSet, assemble_bipolar_matrix,
                  bipolar_matrix, build_code_spec,
                  enumerate_even_parity_codewords,
                  enumerate_spacing_sequences)
from .designs import (DevoreDesign, OocCodeFamily, devore_matrix,
                      devore_optimality_ratio, johnson_bound, ooc_family,
                      ooc_matrix)
from .errors import FormatError, InvariantError, ParameterError
from .fileio import (load_matrix, load_samples, load_signal, save_matrix,
                     save_samples, save_signal)
from .galois import (BinaryPolynomial, ExtensionField, build_field,
                     discrete_log, find_primitive_polynomial, poly_divmod,
                     poly_mul, product_of_roots)
from .matrix import RealMatrix, SensingMatrix, as_unit_columns
from .recovery import (CorrelationCost, ExperimentResult, OmpTrace,
                       SparseSignal, circular_cross_correlation,
                       correlate_all, correlation_cost, gaussian_baseline,
                       measure, noise_sweep, omp, reconstruction_snr_db,
                       recovery_sweep)
from .spacing import (DeltaBoundReport, ScalingReport, SpacingCountReport,
                      delta_bound_check, gamma_root, kappa, scaling_report,
                      spacing_count_report, tau)
from .ternary import (EmbeddingPattern, embed, ternary_matrix, ternary_params,
                      walsh_hadamard_matrix)

__version__ = "0.1.0"

__all__ = [
    "BchCodeSpec", "BinaryPolynomial", "CoherenceCertificate",
    "CorrelationCost", "DeltaBoundReport", "DevoreDesign", "EmbeddingPattern",
    "ExperimentResult", "ExtensionField", "FormatError", "InvariantError",
    "OmpTrace", "OocCodeFamily", "ParameterError", "RealMatrix",
    "ScalingReport", "SensingMatrix", "ShiftGroup", "ShiftGroupPartition",
    "SpacingCountReport", "SpacingSequenceSet", "SparseSignal",
    "as_unit_columns", "assemble_bipolar_matrix", "bipolar_matrix",
    "build_code_spec", "build_field", "circular_cross_correlation",
    "coherence", "coherence_bound_from_distance", "correlate_all",
    "correlation_cost", "delta_bound_check", "devore_matrix",
    "devore_optimality_ratio", "discrete_log", "embed",
    "enumerate_even_parity_codewords", "enumerate_spacing_sequences",
    "find_primitive_polynomial", "gamma_root", "gaussian_baseline",
    "johnson_bound", "kappa", "load_matrix", "load_samples", "load_signal",
    "measure", "noise_sweep", "omp", "ooc_family",
    "ooc_matrix", "poly_divmod", "poly_mul", "product_of_roots",
    "reconstruction_snr_db", "recovery_sweep", "save_matrix", "save_samples",
    "save_signal", "scaling_report",
    "shift_group_partition", "spacing_count_report", "tau", "ternary_matrix",
    "ternary_params", "walsh_hadamard_matrix",
]
