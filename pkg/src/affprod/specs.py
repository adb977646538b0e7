"""JSON schemas for codes, product codes and irregular specs.

Code spec::

    {"family": "even_weight", "n": 4}
    {"family": "reed_muller_1", "r": 3}
    {"generator": "1001\\n0101\\n0011", "field": {"p": 2}}

``generator`` may also be a list of row strings.  Product spec::

    {"row": <code>, "row_rep": "0011", "col": <code>, "col_rep": "0011"}
    {"construction": "IA", "c1": <code>, "c2": <code>, "d1": <code>, "d2": <code>}

Missing representatives are zero.  Nonzero representatives use Construction I
(both codes must contain the all-one word) unless ``"construction": "affine"``
asks for the general compatibility check instead.  Irregular spec::

    {"rows": [<code>, ...], "cols": [<code>, ...], "row_rep": "...", "col_rep": "..."}
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from . import algebra
from .affine import AffineCode
from .codes import LinearCode, family
from .irregular import IrregularSpec
from .product import ProductCode, affine_product, classical_product, construction_I, construction_IA


class SpecError(ValueError):
    pass


def _field(obj: dict) -> int:
    return int(obj.get("field", {}).get("p", 2))


def load_code(obj: dict) -> LinearCode:
    if not isinstance(obj, dict):
        raise SpecError(f"code spec must be an object, got {obj!r}")
    p = _field(obj)
    if "family" in obj:
        params = {k: v for k, v in obj.items() if k not in ("family", "field")}
        if p != 2 and obj["family"] in ("even_weight", "reed_muller_1"):
            raise SpecError(f"family {obj['family']} is binary")
        code = family(obj["family"], **params)
        return code if code.p == p else LinearCode(code.generator, p, code.name)
    if "generator" in obj:
        text = obj["generator"]
        if isinstance(text, list):
            text = "\n".join(text)
        return LinearCode(algebra.parse_matrix(text, p), p)
    raise SpecError("code spec needs 'family' or 'generator'")


def dump_code(code: LinearCode) -> dict:
    rows = [algebra.format_row(r, code.p) for r in code.generator]
    return {"generator": rows, "field": {"p": code.p}}


def _rep(obj: dict, key: str, code: LinearCode):
    text = obj.get(key)
    if text is None:
        return None
    vec = algebra.parse_word(text, code.p)
    if vec.size != code.n:
        raise SpecError(f"{key} has length {vec.size}, code length is {code.n}")
    return vec


def load_product(obj: dict) -> ProductCode:
    kind = obj.get("construction")
    if kind == "IA":
        codes = [load_code(obj[key]) for key in ("c1", "c2", "d1", "d2")]
        return construction_IA(*codes)
    row, col = load_code(obj["row"]), load_code(obj["col"])
    u, v = _rep(obj, "row_rep", row), _rep(obj, "col_rep", col)
    row_aff, col_aff = AffineCode(row, u), AffineCode(col, v)
    if kind == "affine":
        return affine_product(row_aff, col_aff)
    if kind not in (None, "I", "classical"):
        raise SpecError(f"unknown construction {kind!r}")
    if row_aff.is_linear and col_aff.is_linear:
        return classical_product(row, col)
    return construction_I(row_aff, col_aff)


def dump_product(pc: ProductCode) -> dict:
    """Explicit form of ``pc``; loading it back gives the same codeword set."""
    return {
        "row": dump_code(pc.row.base),
        "row_rep": algebra.format_row(pc.row.rep, pc.p),
        "col": dump_code(pc.col.base),
        "col_rep": algebra.format_row(pc.col.rep, pc.p),
        "construction": "affine",
        "kind": pc.kind,
    }


def load_irregular(obj: dict) -> IrregularSpec:
    rows = [load_code(c) for c in obj["rows"]]
    cols = [load_code(c) for c in obj["cols"]]
    p = rows[0].p
    u = algebra.parse_word(obj["row_rep"], p) if obj.get("row_rep") else None
    v = algebra.parse_word(obj["col_rep"], p) if obj.get("col_rep") else None
    return IrregularSpec(rows, cols, u, v)


def read_json(path: str | Path) -> dict:
    with open(path) as fh:
        return json.load(fh)


def matrix_lines(mat, p: int = 2) -> list[str]:
    return [algebra.format_row(r, p) for r in np.asarray(mat)]
