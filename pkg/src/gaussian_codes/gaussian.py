"""Exact Gaussian integers a + bi.

A GaussianInt is an immutable ``(re, im)`` tuple, so it hashes and compares
at C speed and serializes straight to the ``[re, im]`` JSON form.
"""

from __future__ import annotations

import re as _re
from operator import itemgetter

__all__ = [
    "GaussianInt",
    "ZERO",
    "ONE",
    "I",
    "units",
    "associates",
    "round_div",
    "mannheim_weight",
    "parse_gaussian",
]


class GaussianInt(tuple):
    __slots__ = ()

    def __new__(cls, re: int = 0, im: int = 0) -> "GaussianInt":
        return tuple.__new__(cls, (re, im))

    re = property(itemgetter(0))
    im = property(itemgetter(1))

    @classmethod
    def coerce(cls, value) -> "GaussianInt":
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, int):
            return cls(int(value), 0)
        if isinstance(value, (tuple, list)) and len(value) == 2:
            return cls(int(value[0]), int(value[1]))
        if isinstance(value, str):
            return parse_gaussian(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian integer")

    def __add__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self[0] + o[0], self[1] + o[1])

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self[0] - o[0], self[1] - o[1])

    def __rsub__(self, other):
        return GaussianInt.coerce(other) - self

    def __mul__(self, other):
        a, b = self
        c, d = GaussianInt.coerce(other)
        return GaussianInt(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianInt(-self[0], -self[1])

    def __pos__(self):
        return self

    def __bool__(self):
        return self[0] != 0 or self[1] != 0

    def conj(self) -> "GaussianInt":
        return GaussianInt(self[0], -self[1])

    def norm(self) -> int:
        return self[0] * self[0] + self[1] * self[1]

    def __repr__(self):
        return f"GaussianInt({self[0]}, {self[1]})"

    def __str__(self):
        return f"{self[0]}{self[1]:+d}i"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)

_UNITS = (ONE, I, GaussianInt(-1, 0), GaussianInt(0, -1))


def units() -> list[GaussianInt]:
    """The four units of Z[i], always in the order 1, i, -1, -i."""
    return list(_UNITS)


def associates(z: GaussianInt) -> set[GaussianInt]:
    return {u * z for u in _UNITS}


def _round_half_up(num: int, den: int) -> int:
    # den > 0; exact ties go toward +infinity
    return (2 * num + den) // (2 * den)


def round_div(z: GaussianInt, w: GaussianInt) -> GaussianInt:
    """Nearest Gaussian integer to z / w, rounding each component separately."""
    n = w[0] * w[0] + w[1] * w[1]
    if n == 0:
        raise ZeroDivisionError("Gaussian division by zero")
    # z * conj(w)
    a, b = z
    c, d = w
    return GaussianInt(_round_half_up(a * c + b * d, n), _round_half_up(b * c - a * d, n))


def mannheim_weight(z: GaussianInt) -> int:
    return abs(z[0]) + abs(z[1])


_GAUSS_RE = _re.compile(
    r"""^\s*(?:
        (?P<re>[+-]?\d+)\s*(?:(?P<sign>[+-])\s*(?P<im>\d*)\s*[ij])?   # a, a+bi, a-i
      | (?P<pure>[+-]?\d*)\s*[ij]                                      # bi, -i
    )\s*$""",
    _re.VERBOSE,
)


def parse_gaussian(text: str) -> GaussianInt:
    """Parse the compact command-line form: ``3+1i``, ``1-i``, ``-2``, ``3i``."""
    m = _GAUSS_RE.match(text)
    if m is None:
        raise ValueError(f"not a Gaussian integer: {text!r}")
    if m.group("re") is not None:
        real = int(m.group("re"))
        if m.group("sign") is None:
            return GaussianInt(real, 0)
        mag = int(m.group("im")) if m.group("im") else 1
        return GaussianInt(real, mag if m.group("sign") == "+" else -mag)
    pure = m.group("pure")
    if pure in ("", "+"):
        return GaussianInt(0, 1)
    if pure == "-":
        return GaussianInt(0, -1)
    return GaussianInt(0, int(pure))
