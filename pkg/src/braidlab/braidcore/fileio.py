"""JSON braiding files.

Format::

    {"field": "Q" | "Qv", "dim": n, "basis": [labels]?,
     "entries": [{"k": .., "l": .., "i": .., "j": .., "c": "scalar"}, ...]}

Indices are 1-based and an entry means: the coefficient of m_k⊗m_l in
c(m_i⊗m_j) is c.  Omitted entries are zero.
"""

from __future__ import annotations

import json
from pathlib import Path

from ..exactla import ExactMatrix, field_from_tag, format_scalar
from ..exactla.scalars import ScalarSyntaxError
from .space import BraidedVectorSpace, SingularBraiding


class BraidingFormatError(ValueError):
    pass


def load_braiding(document, check: bool = True) -> BraidedVectorSpace:
    """Build a validated braiding from a parsed JSON document (dict).

    ``check=False`` skips the invertibility test (for raw operator files).
    """
    if not isinstance(document, dict):
        raise BraidingFormatError("braiding document must be a JSON object")
    try:
        field = field_from_tag(document.get("field", "Q"))
    except ValueError as exc:
        raise BraidingFormatError(str(exc)) from None
    n = document.get("dim")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise BraidingFormatError("'dim' must be a positive integer")
    labels = document.get("basis")
    if labels is not None and (not isinstance(labels, list) or len(labels) != n):
        raise BraidingFormatError("'basis' must list exactly dim labels")
    entries = document.get("entries")
    if not isinstance(entries, list):
        raise BraidingFormatError("'entries' must be a list")
    table = {}
    for pos, e in enumerate(entries):
        if not isinstance(e, dict):
            raise BraidingFormatError(f"entry {pos} is not an object")
        try:
            k, l, i, j = (e[key] for key in ("k", "l", "i", "j"))
            text = e["c"]
        except KeyError as exc:
            raise BraidingFormatError(f"entry {pos} lacks field {exc}") from None
        for val in (k, l, i, j):
            if not isinstance(val, int) or isinstance(val, bool):
                raise BraidingFormatError(f"entry {pos}: indices must be integers")
            if not 1 <= val <= n:
                raise BraidingFormatError(f"entry {pos}: index {val} out of range 1..{n}")
        if not isinstance(text, str):
            text = str(text)
        try:
            x = field.parse(text)
        except (ScalarSyntaxError, ZeroDivisionError) as exc:
            raise BraidingFormatError(f"entry {pos}: {exc}") from None
        key = ((k - 1) * n + (l - 1), (i - 1) * n + (j - 1))
        if key in table:
            raise BraidingFormatError(f"entry {pos}: duplicate coefficient")
        table[key] = x
    matrix = ExactMatrix.from_sparse(n * n, n * n, table, field)
    try:
        return BraidedVectorSpace(matrix, labels, check=check)
    except SingularBraiding as exc:
        raise BraidingFormatError(str(exc)) from None


def dump_braiding(b: BraidedVectorSpace, with_labels: bool = True) -> dict:
    n = b.n
    entries = []
    for i in range(n):
        for j in range(n):
            col = b.image(i, j)
            for k in range(n):
                for l in range(n):
                    x = col[k * n + l]
                    if x:
                        entries.append({"k": k + 1, "l": l + 1, "i": i + 1, "j": j + 1, "c": format_scalar(x)})
    doc = {"field": b.field.name, "dim": n, "entries": entries}
    if with_labels:
        doc["basis"] = list(b.labels)
    return doc


def read_braiding(path, check: bool = True) -> BraidedVectorSpace:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise BraidingFormatError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise BraidingFormatError(f"{path}: invalid JSON ({exc})") from None
    return load_braiding(doc, check)


def write_braiding(b: BraidedVectorSpace, path) -> None:
    Path(path).write_text(json.dumps(dump_braiding(b), indent=1, sort_keys=True) + "\n", encoding="utf-8")
