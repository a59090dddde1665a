"""CSV plumbing: headered, LF-terminated, floats at 17 significant digits."""
from __future__ import annotations

import csv
import io
import math
import os
import sys
from contextlib import contextmanager

import numpy as np


def fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        v = float(value)
        if math.isnan(v):
            return "nan"
        return "%.17g" % v
    return str(value)


@contextmanager
def _open_dest(dest):
    if dest is None or dest == "-":
        yield sys.stdout
    elif hasattr(dest, "write"):
        yield dest
    else:
        parent = os.path.dirname(os.fspath(dest))
        if parent:
            os.makedirs(parent, exist_ok=True)
        with open(dest, "w", newline="", encoding="utf-8") as fh:
            yield fh


def write_csv(dest, header, rows) -> None:
    """Write ``rows`` under ``header`` to a path, an open stream, or '-' for stdout."""
    with _open_dest(dest) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([fmt(v) for v in row])


def to_csv_string(header, rows) -> str:
    buf = io.StringIO()
    write_csv(buf, header, rows)
    return buf.getvalue()


def read_csv(src):
    """Return ``(header, rows)`` with every cell as a string."""
    if hasattr(src, "read"):
        reader = csv.reader(src)
        lines = list(reader)
    else:
        with open(src, newline="", encoding="utf-8") as fh:
            lines = list(csv.reader(fh))
    if not lines:
        return [], []
    return lines[0], lines[1:]
