"""Plain-text file formats for matrices, sparse signals and samples.

All three formats share the same shape: a magic line with a format
version, a few header fields, then the payload.  Writers emit sorted
descriptor keys and shortest round-trip float representations, so the
same object always serializes to identical bytes.

matrix   magic 'detsense-matrix 1'; header m, n, alphabet, descriptor;
         after a 'columns' line, n lines of m space-separated entries,
         one line per column.  Integer alphabets use integer entries;
         the 'gaussian' alphabet stores reals (unit-norm columns).
signal   magic 'detsense-signal 1'; n; support indices; values.
samples  magic 'detsense-samples 1'; m; a 'values' line; m reals.
"""

from __future__ import annotations

import numpy as np

from .errors import FormatError, ParameterError
from .matrix import RealMatrix, SensingMatrix

MATRIX_MAGIC = "detsense-matrix"
SIGNAL_MAGIC = "detsense-signal"
SAMPLES_MAGIC = "detsense-samples"
FORMAT_VERSION = 1


def _format_real(x: float) -> str:
    return repr(float(x))


def _descriptor_to_text(descriptor) -> str:
    parts = []
    for key in sorted(descriptor):
        value = descriptor[key]
        if not isinstance(value, (int, str)) or isinstance(value, bool):
            raise ParameterError(
                f"descriptor value for {key!r} must be int or str")
        text = str(value)
        if any(ch in text for ch in " =\n\t") or any(
                ch in key for ch in " =\n\t"):
            raise ParameterError("descriptor keys/values must not contain "
                                 "spaces, equals signs or line breaks")
        parts.append(f"{key}={text}")
    return " ".join(parts)


def _descriptor_from_text(text: str) -> dict:
    out = {}
    if not text:
        return out
    for part in text.split(" "):
        if "=" not in part:
            raise FormatError(f"malformed descriptor item {part!r}")
        key, _, value = part.partition("=")
        if not key:
            raise FormatError("empty descriptor key")
        try:
            out[key] = int(value)
        except ValueError:
            out[key] = value
    return out


def save_matrix(path, matrix) -> None:
    """Write a SensingMatrix or RealMatrix in the matrix format."""
    if isinstance(matrix, SensingMatrix):
        alphabet = matrix.alphabet
        rows = [" ".join(str(int(v)) for v in matrix.entries[:, j])
                for j in range(matrix.cols)]
    elif isinstance(matrix, RealMatrix):
        alphabet = "gaussian"
        rows = [" ".join(_format_real(v) for v in matrix.entries[:, j])
                for j in range(matrix.cols)]
    else:
        raise ParameterError("expected SensingMatrix or RealMatrix")
    lines = [
        f"{MATRIX_MAGIC} {FORMAT_VERSION}",
        f"m {matrix.rows}",
        f"n {matrix.cols}",
        f"alphabet {alphabet}",
        f"descriptor {_descriptor_to_text(matrix.descriptor)}".rstrip(),
        "columns",
    ]
    lines.extend(rows)
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def _read_lines(path) -> list:
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read().splitlines()
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path}: not an ascii text file") from exc


def _expect_magic(lines, magic, path):
    if not lines:
        raise FormatError(f"{path}: empty file")
    head = lines[0].split(" ")
    if len(head) != 2 or head[0] != magic:
        raise FormatError(f"{path}: expected magic {magic!r}")
    if head[1] != str(FORMAT_VERSION):
        raise FormatError(f"{path}: unsupported format version {head[1]!r}")


def _header_int(line: str, key: str, path) -> int:
    parts = line.split(" ")
    if len(parts) != 2 or parts[0] != key:
        raise FormatError(f"{path}: expected header line {key!r}")
    try:
        value = int(parts[1])
    except ValueError as exc:
        raise FormatError(f"{path}: bad integer in header {key!r}") from exc
    if value < 0:
        raise FormatError(f"{path}: negative header value for {key!r}")
    return value


def load_matrix(path):
    """Read a matrix file back; returns SensingMatrix or RealMatrix."""
    lines = _read_lines(path)
    _expect_magic(lines, MATRIX_MAGIC, path)
    if len(lines) < 6:
        raise FormatError(f"{path}: truncated header")
    m = _header_int(lines[1], "m", path)
    n = _header_int(lines[2], "n", path)
    alpha_parts = lines[3].split(" ")
    if len(alpha_parts) != 2 or alpha_parts[0] != "alphabet":
        raise FormatError(f"{path}: expected the alphabet header")
    alphabet = alpha_parts[1]
    if not lines[4].startswith("descriptor"):
        raise FormatError(f"{path}: expected the descriptor header")
    descriptor = _descriptor_from_text(lines[4][len("descriptor"):].strip())
    if lines[5] != "columns":
        raise FormatError(f"{path}: expected the 'columns' separator")
    body = lines[6:]
    if len(body) != n:
        raise FormatError(f"{path}: expected {n} column lines, "
                          f"found {len(body)}")
    real = alphabet == "gaussian"
    dtype = np.float64 if real else np.int64
    entries = np.empty((m, n), dtype=dtype)
    for j, line in enumerate(body):
        fields = line.split(" ")
        if len(fields) != m:
            raise FormatError(f"{path}: column {j} has {len(fields)} "
                              f"entries, expected {m}")
        try:
            if real:
                entries[:, j] = [float(f) for f in fields]
            else:
                entries[:, j] = [int(f) for f in fields]
        except ValueError as exc:
            raise FormatError(f"{path}: unparsable entry in column {j}") \
                from exc
    try:
        if real:
            return RealMatrix(entries, descriptor)
        return SensingMatrix(entries.astype(np.int8), alphabet, descriptor)
    except ParameterError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def save_signal(path, signal) -> None:
    lines = [
        f"{SIGNAL_MAGIC} {FORMAT_VERSION}",
        f"n {signal.n}",
        ("support " + " ".join(str(t) for t in signal.support)).rstrip(),
        ("values " + " ".join(_format_real(v) for v in signal.values)).rstrip(),
    ]
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def load_signal(path):
    from .recovery import SparseSignal

    lines = _read_lines(path)
    _expect_magic(lines, SIGNAL_MAGIC, path)
    if len(lines) < 4:
        raise FormatError(f"{path}: truncated signal file")
    n = _header_int(lines[1], "n", path)
    if not lines[2].startswith("support"):
        raise FormatError(f"{path}: expected the support line")
    if not lines[3].startswith("values"):
        raise FormatError(f"{path}: expected the values line")
    support_text = lines[2][len("support"):].split()
    values_text = lines[3][len("values"):].split()
    try:
        support = [int(t) for t in support_text]
        values = [float(v) for v in values_text]
    except ValueError as exc:
        raise FormatError(f"{path}: unparsable signal data") from exc
    try:
        return SparseSignal(n, support, values)
    except ParameterError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def save_samples(path, samples) -> None:
    samples = np.asarray(samples, dtype=np.float64)
    if samples.ndim != 1:
        raise ParameterError("samples must be a 1-d vector")
    lines = [
        f"{SAMPLES_MAGIC} {FORMAT_VERSION}",
        f"m {samples.size}",
        "values",
    ]
    lines.extend(_format_real(v) for v in samples)
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def load_samples(path) -> np.ndarray:
    lines = _read_lines(path)
    _expect_magic(lines, SAMPLES_MAGIC, path)
    if len(lines) < 3:
        raise FormatError(f"{path}: truncated samples file")
    m = _header_int(lines[1], "m", path)
    if lines[2] != "values":
        raise FormatError(f"{path}: expected the 'values' separator")
    body = lines[3:]
    if len(body) != m:
        raise FormatError(f"{path}: expected {m} samples, found {len(body)}")
    try:
        return np.array([float(v) for v in body], dtype=np.float64)
    except ValueError as exc:
        raise FormatError(f"{path}: unparsable sample value") from exc
