"""Text formats for cubes (``tgc v1``) and binary tables (``tgb v1``), plus JSON encoders."""
from __future__ import annotations

import numpy as np

from .binary import BinaryTable
from .core import CayleyCube
from .errors import InputError


class FormatError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _parse(text: str, header: str, power: int):
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    body = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    comments = tuple(ln[1:].strip() for _, ln in lines if ln.startswith("#"))
    if not body or body[0][1] != header:
        raise FormatError(f"expected header '{header}'", body[0][0] if body else 1)
    if len(body) < 2:
        raise FormatError("missing 'order n' line", body[0][0] + 1)
    lineno, order_line = body[1]
    parts = order_line.split()
    if len(parts) != 2 or parts[0] != "order" or not parts[1].isdigit() or int(parts[1]) < 1:
        raise FormatError(f"expected 'order n', got {order_line!r}", lineno)
    n = int(parts[1])
    values, where = [], []
    for lineno, ln in body[2:]:
        for tok in ln.split():
            try:
                v = int(tok)
            except ValueError:
                raise FormatError(f"not an integer: {tok!r}", lineno) from None
            if not 0 <= v < n:
                raise FormatError(f"entry {v} is outside [0, {n})", lineno)
            values.append(v)
            where.append(lineno)
    need = n ** power
    if len(values) != need:
        last = where[need] if len(values) > need else (body[-1][0])
        raise FormatError(f"order {n} needs {need} entries, got {len(values)}", last)
    return n, np.asarray(values, dtype=np.int64), comments


def parse_cube(text: str) -> CayleyCube:
    return parse_cube_with_comments(text)[0]


def parse_cube_with_comments(text: str) -> tuple[CayleyCube, tuple]:
    """The cube and its comment lines; ``format_cube`` of both restores the text."""
    n, vals, comments = _parse(text, "tgc v1", 3)
    return CayleyCube(vals.reshape(n, n, n)), comments


def parse_binary(text: str) -> BinaryTable:
    n, vals, _ = _parse(text, "tgb v1", 2)
    return BinaryTable(vals.reshape(n, n))


def format_cube(cube: CayleyCube, comments: tuple = ()) -> str:
    """One line per ``(x, y)`` holding the n values over ``z``."""
    n = cube.order
    out = ["tgc v1", f"order {n}"]
    out += [f"# {c}" for c in comments]
    for x in range(n):
        for y in range(n):
            out.append(" ".join(str(int(v)) for v in cube.table[x, y]))
    return "\n".join(out) + "\n"


def format_binary(b: BinaryTable, comments: tuple = ()) -> str:
    out = ["tgb v1", f"order {b.order}"]
    out += [f"# {c}" for c in comments]
    out += [" ".join(str(int(v)) for v in row) for row in b.table]
    return "\n".join(out) + "\n"


def read_cube(path) -> CayleyCube:
    with open(path, encoding="utf-8") as fh:
        return parse_cube(fh.read())


def write_cube(path, cube: CayleyCube, comments: tuple = ()):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_cube(cube, comments))


def read_binary(path) -> BinaryTable:
    with open(path, encoding="utf-8") as fh:
        return parse_binary(fh.read())


def write_binary(path, b: BinaryTable, comments: tuple = ()):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_binary(b, comments))


# -- JSON ---------------------------------------------------------------------

def _number(v: float):
    # exact integers stay integers so permutation matrices round-trip bit for bit
    return int(v) if float(v).is_integer() else float(v)


def matrix_to_json(m: np.ndarray) -> list:
    m = np.asarray(m, dtype=complex)
    return [[[_number(v.real), _number(v.imag)] for v in row] for row in m]


def matrix_from_json(rows) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in rows])


def representation_to_json(rep) -> dict:
    n = rep.group_order
    return {
        "kind": rep.kind,
        "order": n,
        "dim": rep.dim,
        "entries": {f"{x},{y}": matrix_to_json(rep.matrices[x, y])
                    for x in range(n) for y in range(n)},
    }


def representation_from_json(obj: dict):
    from .representations import Representation

    n, d = obj["order"], obj["dim"]
    mats = np.zeros((n, n, d, d), dtype=complex)
    for key, rows in obj["entries"].items():
        x, y = (int(v) for v in key.split(","))
        mats[x, y] = matrix_from_json(rows)
    return Representation(obj["kind"], mats)


def decomposition_to_json(dec) -> dict:
    n = dec.blocks[0].shape[0]
    return {
        "kind": dec.kind,
        "order": n,
        "block_dims": list(dec.block_dims),
        "irreducible": list(dec.irreducible),
        "seed": dec.seed,
        "residual": dec.residual,
        "basis_change": matrix_to_json(dec.basis_change),
        "blocks": [{f"{x},{y}": matrix_to_json(b[x, y]) for x in range(n) for y in range(n)}
                   for b in dec.blocks],
    }


def jsonable(obj):
    """Convert numpy scalars, tuples and NamedTuples for ``json.dumps``."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if hasattr(obj, "_asdict"):
        return jsonable(obj._asdict())
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj

