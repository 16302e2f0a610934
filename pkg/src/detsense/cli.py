"""Command line interface.

Subcommands: build, analyze, recover, sweep, noise-sweep, count.  Every
command is deterministic given its flags (and seed, where one applies);
outputs never depend on wall clock or environment.  Exit codes: 0 on
success, 1 for usage errors (bad flags or parameter ranges), 2 for
data errors (unreadable or malformed files), 3 for violated
construction invariants, including recovery on a degenerate matrix.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

import numpy as np

from . import analysis, bch, designs, fileio, recovery, spacing, ternary
from .errors import FormatError, InvariantError, ParameterError
from .matrix import RealMatrix, SensingMatrix

# hard ceiling on columns for CLI-built matrices
MAX_CLI_COLS = 1 << 20
DEFAULT_TRIALS = 1000


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); usage errors are 1
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="detsense", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a matrix and write it")
    b.add_argument("family",
                   choices=["bch", "devore", "ooc", "ternary", "gaussian"])
    b.add_argument("--mtilde", type=int, help="field degree (bch)")
    b.add_argument("--i", type=int, dest="spacing",
                   help="minimum circular spacing (bch)")
    b.add_argument("--p", type=int, help="field size (devore, ternary)")
    b.add_argument("--r", type=int, help="polynomial degree cap "
                                         "(devore, ternary)")
    b.add_argument("--a", type=int, help="size parameter (ooc)")
    b.add_argument("--x-mtilde", type=int, dest="x_mtilde",
                   help="bipolar factor field degree (ternary)")
    b.add_argument("--x-i", type=int, dest="x_spacing",
                   help="bipolar factor spacing (ternary)")
    b.add_argument("--m", type=int, help="rows (gaussian)")
    b.add_argument("--n", type=int, help="columns (gaussian)")
    b.add_argument("--seed", type=int, help="seed (gaussian)")
    b.add_argument("--out", required=True, help="output matrix file")

    a = sub.add_parser("analyze", help="certify coherence of a matrix file")
    a.add_argument("path", help="matrix file")

    r = sub.add_parser("recover", help="run OMP on a samples file")
    r.add_argument("--matrix", required=True)
    r.add_argument("--samples", required=True)
    r.add_argument("--k", type=int, required=True)
    r.add_argument("--fast", action="store_true",
                   help="correlate via shift-group transforms")
    r.add_argument("--out", required=True, help="estimated signal file")
    r.add_argument("--trace", help="optional per-iteration trace file")

    s = sub.add_parser("sweep", help="success rate versus sparsity")
    s.add_argument("--matrix", required=True)
    s.add_argument("--kmin", type=int, required=True)
    s.add_argument("--kmax", type=int, required=True)
    s.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--fast", action="store_true")
    s.add_argument("--out", required=True, help="output CSV")

    ns = sub.add_parser("noise-sweep", help="mean output SNR versus noise")
    ns.add_argument("--matrix", required=True)
    ns.add_argument("--k", type=int, required=True)
    ns.add_argument("--levels", required=True,
                    help="comma-separated input SNR levels in dB "
                         "(inf for noiseless)")
    ns.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    ns.add_argument("--seed", type=int, required=True)
    ns.add_argument("--fast", action="store_true")
    ns.add_argument("--out", required=True, help="output CSV")

    c = sub.add_parser("count", help="spacing counts and code dimensions")
    c.add_argument("--mtilde", type=int, required=True)
    c.add_argument("--i", type=int, dest="spacing", required=True)
    return parser


# argparse dests whose visible flag spells differently
_FLAG_NAMES = {"spacing": "--i", "x_spacing": "--x-i"}


def _require(args, names, family):
    missing = [_FLAG_NAMES.get(name, f"--{name.replace('_', '-')}")
               for name in names if getattr(args, name) is None]
    if missing:
        raise ParameterError(
            f"build {family} requires {', '.join(missing)}")


def _check_cols(cols: int) -> None:
    if cols > MAX_CLI_COLS:
        raise ParameterError(
            f"{cols} columns exceed the command line cap of {MAX_CLI_COLS}")


def _predict_bch_cols(mtilde: int, spacing: int) -> int:
    seqs = bch.enumerate_spacing_sequences(mtilde, spacing)
    if spacing == mtilde:
        return (1 << mtilde) - 1
    return 1 << (seqs.count - 1)


def _cmd_build(args) -> int:
    family = args.family
    if family == "bch":
        _require(args, ["mtilde", "spacing"], family)
        _check_cols(_predict_bch_cols(args.mtilde, args.spacing))
        matrix = bch.bipolar_matrix(args.mtilde, args.spacing)
    elif family == "devore":
        _require(args, ["p", "r"], family)
        _check_cols(designs.DevoreDesign(args.p, args.r).cols)
        matrix = designs.devore_matrix(args.p, args.r)
    elif family == "ooc":
        _require(args, ["a"], family)
        matrix = designs.ooc_matrix(args.a)
        _check_cols(matrix.cols)
    elif family == "ternary":
        _require(args, ["p", "r", "x_mtilde", "x_spacing"], family)
        binary_cols = designs.DevoreDesign(args.p, args.r).cols
        bipolar_cols = _predict_bch_cols(args.x_mtilde, args.x_spacing)
        _check_cols(binary_cols * bipolar_cols)
        matrix = ternary.ternary_matrix(
            designs.devore_matrix(args.p, args.r),
            bch.bipolar_matrix(args.x_mtilde, args.x_spacing))
    else:  # gaussian
        _require(args, ["m", "n", "seed"], family)
        _check_cols(args.n)
        matrix = recovery.gaussian_baseline(args.m, args.n, args.seed)
    fileio.save_matrix(args.out, matrix)
    print(f"wrote {matrix.rows}x{matrix.cols} {matrix.alphabet} "
          f"matrix to {args.out}")
    return 0


def _format_fraction(fraction) -> str:
    return f"{fraction.numerator}/{fraction.denominator}"


def _print_certificate(matrix: SensingMatrix) -> None:
    certificate = analysis.coherence(matrix)
    raw = f"{certificate.max_inner}/{certificate.norm_square}"
    reduced = _format_fraction(certificate.coherence)
    line = f"coherence {raw}"
    if reduced != raw:
        line += f" = {reduced}"
    print(f"{line} ({certificate.coherence_float!r})")
    print(f"certified restricted isometry order {certificate.rip_order_max}")
    items = sorted(certificate.delta_table.items())
    if items:
        shown = items[:12]
        text = " ".join(f"k={k}:{_format_fraction(v)}" for k, v in shown)
        if len(items) > len(shown):
            text += " ..."
        print(f"delta table {text}")
    print(f"degenerate {'yes' if certificate.degenerate else 'no'}")
    if matrix.alphabet == "binary":
        weight = matrix.constant_norm_square
        bound = designs.johnson_bound(matrix.rows, weight,
                                      certificate.max_inner)
        status = "within" if matrix.cols <= bound else "ABOVE"
        print(f"johnson bound for (m={matrix.rows}, w={weight}, "
              f"overlap={certificate.max_inner}): {bound}, "
              f"{matrix.cols} columns {status}")
    descriptor = matrix.descriptor
    if matrix.alphabet == "bipolar" and descriptor.get("family") == "bch":
        spec = bch.build_code_spec(descriptor["mtilde"], descriptor["i"])
        bound, threshold = analysis.coherence_bound_from_distance(
            spec.length, spec.min_distance_bound)
        threshold_text = ("inf" if threshold == math.inf
                          else _format_fraction(threshold))
        print(f"distance bound: coherence <= {_format_fraction(bound)}, "
              f"order threshold {threshold_text}")


def _cmd_analyze(args) -> int:
    matrix = fileio.load_matrix(args.path)
    print(f"matrix {matrix.rows}x{matrix.cols} alphabet={matrix.alphabet}")
    descriptor_text = " ".join(
        f"{key}={matrix.descriptor[key]}" for key in sorted(matrix.descriptor))
    print(f"descriptor {descriptor_text}" if descriptor_text
          else "descriptor (none)")
    partition = analysis.shift_group_partition(matrix)
    period_counts = {}
    for group in partition.groups:
        period_counts[group.period] = period_counts.get(group.period, 0) + 1
    periods_text = " ".join(f"{p}:{c}" for p, c in sorted(period_counts.items()))
    print(f"shift groups {partition.group_count} (period:count {periods_text})")
    if isinstance(matrix, SensingMatrix):
        print(f"column norm squared "
              f"{matrix.constant_norm_square if matrix.constant_norm_square is not None else 'non-constant'}")
        if matrix.constant_norm_square is None:
            raise ParameterError(
                "cannot certify coherence with non-constant column norms")
        _print_certificate(matrix)
    else:
        columns = matrix.unit_columns()
        gram = columns.T @ columns
        np.fill_diagonal(gram, 0.0)
        print(f"measured coherence {float(np.abs(gram).max())!r} "
              "(real matrix, no exact certificate)")
    return 0


def _duplicate_columns(partition) -> bool:
    for group in partition.groups:
        if len(set(group.offsets)) != len(group.offsets):
            return True
    return False


def _cmd_recover(args) -> int:
    matrix = fileio.load_matrix(args.matrix)
    samples = fileio.load_samples(args.samples)
    if samples.size != matrix.rows:
        raise FormatError(
            f"samples length {samples.size} does not match the "
            f"{matrix.rows}-row matrix")
    partition = analysis.shift_group_partition(matrix)
    trace = recovery.omp(matrix, partition, samples, args.k, fast=args.fast)
    fileio.save_signal(args.out, trace.estimate)
    if args.trace:
        lines = ["iteration selected residual_norm"]
        for it, (index, rss) in enumerate(
                zip(trace.selected, trace.residual_norm_squares), start=1):
            lines.append(f"{it} {index} {repr(math.sqrt(rss))}")
        with open(args.trace, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + "\n")
    print(f"recovered support {' '.join(str(t) for t in trace.estimate.support)}")
    print(f"wrote estimate to {args.out}")
    if _duplicate_columns(partition):
        print("warning: matrix has duplicate columns, recovery is not "
              "identifiable", file=sys.stderr)
        return 3
    return 0


def _cmd_sweep(args) -> int:
    matrix = fileio.load_matrix(args.matrix)
    if args.kmin < 1 or args.kmax < args.kmin:
        raise ParameterError("need 1 <= kmin <= kmax")
    partition = (analysis.shift_group_partition(matrix)
                 if args.fast else None)
    result = recovery.recovery_sweep(
        matrix, partition, range(args.kmin, args.kmax + 1),
        args.trials, args.seed, fast=args.fast)
    with open(args.out, "w", encoding="ascii", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["k", "success_rate", "trials", "seed"])
        for k, rate in zip(result.axis, result.values):
            writer.writerow([k, repr(rate), result.trials, result.seed])
    print(f"wrote sweep over k={args.kmin}..{args.kmax} to {args.out}")
    return 0


def _parse_levels(text: str):
    levels = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            raise ParameterError("empty noise level")
        try:
            levels.append(float(item))
        except ValueError as exc:
            raise ParameterError(f"bad noise level {item!r}") from exc
    return levels


def _cmd_noise_sweep(args) -> int:
    matrix = fileio.load_matrix(args.matrix)
    levels = _parse_levels(args.levels)
    partition = (analysis.shift_group_partition(matrix)
                 if args.fast else None)
    result = recovery.noise_sweep(matrix, partition, args.k, levels,
                                  args.trials, args.seed, fast=args.fast)
    with open(args.out, "w", encoding="ascii", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["noise_db", "mean_snr_db", "trials", "seed"])
        for level, mean in zip(result.axis, result.values):
            writer.writerow([repr(level), repr(mean), result.trials,
                             result.seed])
    print(f"wrote noise sweep at k={args.k} to {args.out}")
    return 0


def _cmd_count(args) -> int:
    mtilde, spc = args.mtilde, args.spacing
    report = spacing.spacing_count_report(spc, mtilde)
    scale = spacing.scaling_report(mtilde, spc)
    print(f"circular spacing count tau(a={spc}, b={mtilde}) = {report.tau}")
    print(f"linear spacing count kappa(a={spc}, b={mtilde}) = {report.kappa}")
    print(f"parity check degree {scale.dimension}")
    if spc == mtilde:
        print(f"maximal spacing case: square {scale.rows}x{scale.cols} "
              "circulant")
    print(f"matrix size {scale.rows}x{scale.cols}, certified order "
          f"{scale.certified_order} ({scale.certified_source})")
    print(f"growth constants gamma={report.gamma!r} delta={report.delta!r}"
          + (f" threshold a^0.7={report.delta_threshold!r}"
             if spc >= 2 else ""))
    return 0


_HANDLERS = {
    "build": _cmd_build,
    "analyze": _cmd_analyze,
    "recover": _cmd_recover,
    "sweep": _cmd_sweep,
    "noise-sweep": _cmd_noise_sweep,
    "count": _cmd_count,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ParameterError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return 1
    except (FormatError, OSError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
