"""JSON and text renderings shared by the CLI.

Gaussian integers are ``[re, im]``; vectors and polynomials are arrays of
those (polynomials ascending, zero polynomial ``[]``).
"""

from __future__ import annotations

import json
from typing import Sequence

from .codes import ConstacyclicCode, generator_matrix, parity_check_matrix
from .errors import IdentityViolation
from .gaussian import GaussianInt
from .poly import Poly
from .syndrome import SyndromeTable


def vector_to_json(v: Sequence) -> list[list[int]]:
    return [[int(x[0]), int(x[1])] for x in v]


def vector_from_json(data) -> list[GaussianInt]:
    if not isinstance(data, list):
        raise ValueError("expected a JSON array of [re, im] pairs")
    return [GaussianInt.coerce(x) for x in data]


def matrix_to_json(rows) -> list:
    return [vector_to_json(r) for r in rows]


def code_to_json(code: ConstacyclicCode, matrices: bool = True) -> dict:
    d = code.to_dict()
    if matrices:
        d["G"] = matrix_to_json(generator_matrix(code))
        d["H"] = matrix_to_json(parity_check_matrix(code))
    return d


def code_from_json(data: dict) -> ConstacyclicCode:
    """Load a code descriptor; embedded G/H (as written by ``construct``) must agree."""
    code = ConstacyclicCode.from_dict(data)
    for name, build in (("G", generator_matrix), ("H", parity_check_matrix)):
        if name in data:
            ring = code.ring
            given = [[ring.elem(GaussianInt.coerce(x)) for x in row] for row in data[name]]
            if given != build(code):
                raise IdentityViolation(f"embedded {name} matrix does not match the code polynomials")
    return code


def load_json(path: str):
    if path == "-":
        import sys

        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def table_to_json(table: SyndromeTable) -> list[dict]:
    return [{"leader": vector_to_json(leader), "syndrome": s.to_json()} for leader, s in table.rows()]


def format_matrix(rows) -> str:
    cells = [[str(x) for x in row] for row in rows]
    if not cells:
        return "(empty)"
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


def format_leader(leader: Sequence) -> str:
    for j, x in enumerate(leader):
        if x:
            if j == 0:
                return "1" if x == (1, 0) else f"({x})"
            mono = "x" if j == 1 else f"x^{j}"
            return mono if x == (1, 0) else f"({x}){mono}"
    return "0"


def format_table(table: SyndromeTable) -> str:
    rows = [(format_leader(leader), str(s)) for leader, s in table.rows()]
    width = max(len(a) for a, _ in rows)
    return "\n".join(f"{a.ljust(width)}  ->  {b}" for a, b in rows)


def format_code(code: ConstacyclicCode) -> str:
    lines = [
        f"ring    : {code.ring}",
        f"n, k    : {code.n}, {code.k}",
        f"lambda  : {code.lam}",
        f"g(x)    : {code.gen}",
        f"h(x)    : {code.check}",
        "",
        f"G ({code.k} x {code.n}):",
        format_matrix(generator_matrix(code)),
        "",
        f"H ({code.n - code.k} x {code.n}):",
        format_matrix(parity_check_matrix(code)),
    ]
    return "\n".join(lines)


def poly_from_json(ring, data) -> Poly:
    return Poly(ring, vector_from_json(data))
