"""Readers and writers for the on-disk formats.

* density JSON: ``{"re": [[...] x4], "im": [[...] x4]}``, row-major 4x4;
* Bloch matrix CSV: 4 rows of 4 comma-separated decimals;
* reports: plain JSON documents produced from the ``to_dict`` methods.
"""

import csv
import io
import json
import math

import numpy as np

from .errors import BlochError


class FormatError(BlochError):
    """Malformed input file; the message names the offending field or line."""


def _matrix_field(data, key, source):
    if key not in data:
        raise FormatError(f"{source}: missing field '{key}'")
    rows = data[key]
    if not isinstance(rows, list) or len(rows) != 4:
        raise FormatError(f"{source}: field '{key}' must be a list of 4 rows")
    out = np.empty((4, 4))
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != 4:
            raise FormatError(f"{source}: field '{key}' row {i} must have 4 numbers")
        for j, val in enumerate(row):
            if isinstance(val, bool) or not isinstance(val, (int, float)) or not math.isfinite(val):
                raise FormatError(f"{source}: field '{key}'[{i}][{j}] is not a finite number: {val!r}")
            out[i, j] = val
    return out


def density_from_json(text, source="<input>"):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise FormatError(f"{source}: top level must be an object with 're' and 'im'")
    return _matrix_field(data, "re", source) + 1j * _matrix_field(data, "im", source)


def density_to_json(rho, metadata=None):
    rho = np.asarray(rho, dtype=complex)
    doc = {"re": rho.real.tolist(), "im": rho.imag.tolist()}
    if metadata:
        doc["meta"] = metadata
    return json.dumps(doc, indent=2) + "\n"


def read_density(path):
    with open(path) as fh:
        return density_from_json(fh.read(), source=str(path))


def write_density(path, rho, metadata=None):
    with open(path, "w") as fh:
        fh.write(density_to_json(rho, metadata))


def bloch_from_csv(text, source="<input>"):
    rows = [row for row in csv.reader(io.StringIO(text)) if any(cell.strip() for cell in row)]
    if len(rows) != 4:
        raise FormatError(f"{source}: Bloch matrix CSV needs 4 rows, found {len(rows)}")
    out = np.empty((4, 4))
    for i, row in enumerate(rows):
        if len(row) != 4:
            raise FormatError(f"{source}: line {i + 1} has {len(row)} fields, expected 4")
        for j, cell in enumerate(row):
            try:
                out[i, j] = float(cell)
            except ValueError:
                raise FormatError(f"{source}: line {i + 1} field {j + 1} is not a number: {cell.strip()!r}") from None
    return out


def bloch_to_csv(r):
    return "".join(",".join(repr(float(t)) for t in row) + "\n" for row in np.asarray(r))
