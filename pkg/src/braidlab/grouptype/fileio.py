"""JSON files describing Yetter–Drinfeld data over a group.

Format::

    {"field": "Q" | "Qv",
     "group": {"kind": "fg_abelian", "orders": [0, 4]}
            | {"kind": "table", "elements": ["e", "s"], "mul": [["e", "s"], ["s", "e"]]},
     "degrees": [element, ...],
     "action": {generator: matrix, ...}}

fg-abelian elements are integer vectors and generators are 1-based indices
("1", "2", ...); table elements and generators are element names.  Matrices
are lists of rows of scalar strings.
"""

from __future__ import annotations

import json
from pathlib import Path

from ..exactla import ExactMatrix, field_from_tag
from ..exactla.scalars import ScalarSyntaxError
from .groups import FgAbelianGroup, GroupError, TableGroup
from .ydmodule import GroupYDData, InvalidYDData


class GroupFileError(ValueError):
    pass


def _matrix(raw, field, what):
    if not isinstance(raw, list) or not raw or not all(isinstance(r, list) for r in raw):
        raise GroupFileError(f"{what}: matrix must be a non-empty list of rows")
    try:
        return ExactMatrix([[field.parse(x if isinstance(x, str) else str(x)) for x in r] for r in raw], field)
    except (ScalarSyntaxError, ZeroDivisionError, ValueError) as exc:
        raise GroupFileError(f"{what}: {exc}") from None


def load_group_yd(doc) -> GroupYDData:
    if not isinstance(doc, dict):
        raise GroupFileError("group data document must be a JSON object")
    try:
        field = field_from_tag(doc.get("field", "Q"))
    except ValueError as exc:
        raise GroupFileError(str(exc)) from None
    g = doc.get("group")
    if not isinstance(g, dict):
        raise GroupFileError("'group' must be an object")
    degrees = doc.get("degrees")
    action = doc.get("action")
    if not isinstance(degrees, list) or not degrees:
        raise GroupFileError("'degrees' must be a non-empty list")
    if not isinstance(action, dict):
        raise GroupFileError("'action' must be an object")
    try:
        if g.get("kind") == "fg_abelian":
            orders = g.get("orders")
            if not isinstance(orders, list) or not all(isinstance(o, int) and not isinstance(o, bool) for o in orders):
                raise GroupFileError("'orders' must be a list of integers")
            G = FgAbelianGroup(orders)
            for deg in degrees:
                if not isinstance(deg, list) or len(deg) != G.rank or not all(isinstance(x, int) for x in deg):
                    raise GroupFileError(f"degree {deg!r} is not an integer vector of length {G.rank}")
            acts = {}
            for key, raw in action.items():
                k = str(key).lstrip("g")
                if not k.isdigit() or not 1 <= int(k) <= G.rank:
                    raise GroupFileError(f"unknown generator {key!r}")
                acts[int(k) - 1] = _matrix(raw, field, f"action of {key}")
        elif g.get("kind") == "table":
            G = TableGroup(g.get("elements") or [], g.get("mul") or [])
            degrees = [G.element(x) for x in degrees]
            acts = {G.element(key): _matrix(raw, field, f"action of {key}") for key, raw in action.items()}
        else:
            raise GroupFileError("group kind must be 'fg_abelian' or 'table'")
        return GroupYDData(G, degrees, acts, field)
    except (GroupError, InvalidYDData) as exc:
        raise GroupFileError(str(exc)) from None


def dump_group_yd(d: GroupYDData) -> dict:
    G = d.group
    if isinstance(G, FgAbelianGroup):
        action = {str(k + 1): m.to_strings() for k, m in sorted(d.action.items())}
    else:
        action = {G.names[k]: m.to_strings() for k, m in sorted(d.action.items())}
    return {
        "field": d.field.name,
        "group": G.describe(),
        "degrees": [G.format(x) for x in d.degrees],
        "action": action,
    }


def read_group_yd(path) -> GroupYDData:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise GroupFileError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise GroupFileError(f"{path}: invalid JSON ({exc})") from None
    return load_group_yd(doc)


def write_group_yd(d: GroupYDData, path) -> None:
    Path(path).write_text(json.dumps(dump_group_yd(d), indent=1, sort_keys=True) + "\n", encoding="utf-8")
