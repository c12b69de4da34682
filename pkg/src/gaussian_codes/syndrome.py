"""Coset-leader syndrome tables and Mannheim-weight-1 decoding."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .codes import ConstacyclicCode
from .errors import SyndromeCollision, Uncorrectable
from .gaussian import ZERO, GaussianInt, units
from .poly import Poly, divmod_coeffs
from .ring import ResidueRing

__all__ = ["DecodeResult", "SyndromeTable", "syndrome", "syndrome_key", "build_table", "decode"]


def _received(code: ConstacyclicCode, r: Sequence) -> list[GaussianInt]:
    if len(r) != code.n:
        raise ValueError(f"received vector has length {len(r)}, code expects n = {code.n}")
    ring = code.ring
    try:
        # fast path: every symbol already seen by this ring
        return list(map(ring._canon_cache.__getitem__, r))
    except (KeyError, TypeError):
        return [ring.canonicalize(GaussianInt.coerce(x)) for x in r]


def syndrome(code: ConstacyclicCode, r: Sequence) -> Poly:
    """Remainder of r(x) modulo g(x)."""
    _, rem = divmod_coeffs(code.ring, _received(code, r), code.gen.coeffs)
    return Poly(code.ring, rem)


def syndrome_key(code: ConstacyclicCode, s: Poly) -> tuple[GaussianInt, ...]:
    """Fixed-length (deg g) ascending coefficient tuple of a syndrome."""
    return tuple(s.padded(code.redundancy))


class DecodeResult(NamedTuple):
    codeword: list[GaussianInt]
    error: list[GaussianInt]
    message: list[GaussianInt]
    syndrome_key: tuple[GaussianInt, ...]
    ring: ResidueRing

    @property
    def syndrome(self) -> Poly:
        return Poly(self.ring, self.syndrome_key)


class SyndromeTable:
    """Map from syndrome key to the weight-<=1 error vector u * x^j that produced it.

    Every associate u * x^j is stored explicitly, so lookup needs no unit
    normalization. Alongside each leader e the table keeps e(x) div g(x),
    which lets decode recover the message without a second division.
    """

    def __init__(self, code: ConstacyclicCode, entries: dict, leaders: list, corrections: dict):
        self.code = code
        self.entries = entries
        # (leader, key) in (j, unit index) order, zero error first
        self.leaders = leaders
        # key -> (j, u, [(i, q_i) for nonzero coefficients of u*x^j div g])
        self._corrections = corrections

    def __len__(self):
        return len(self.entries)

    def __contains__(self, key):
        return key in self.entries

    def lookup(self, s: Poly):
        return self.entries.get(syndrome_key(self.code, s))

    def rows(self) -> list[tuple[tuple[GaussianInt, ...], Poly]]:
        """(leader, syndrome) pairs in dump order."""
        ring = self.code.ring
        return [(leader, Poly(ring, key)) for leader, key in self.leaders]

    def decode(self, r: Sequence) -> DecodeResult:
        return decode(self.code, self, r)


def build_table(code: ConstacyclicCode) -> SyndromeTable:
    n, k, ring = code.n, code.k, code.ring
    g = code.gen.coeffs
    zero_error = (ZERO,) * n
    zero_key = (ZERO,) * code.redundancy
    entries = {zero_key: zero_error}
    corrections = {}
    leaders = [(zero_error, zero_key)]
    for j in range(n):
        for u in units():
            err = [ZERO] * n
            err[j] = ring.elem(u)
            err = tuple(err)
            q, rem = divmod_coeffs(ring, err, g)
            key = tuple(rem)
            if key in entries:
                raise SyndromeCollision(entries[key], err, Poly(ring, key))
            entries[key] = err
            corrections[key] = (j, err[j], [(i, c) for i, c in enumerate(q) if c != ZERO])
            leaders.append((err, key))
    return SyndromeTable(code, entries, leaders, corrections)


def decode(code: ConstacyclicCode, table: SyndromeTable, r: Sequence) -> DecodeResult:
    """Correct a single Mannheim-weight-1 error; raises Uncorrectable on a table miss.

    Heavier errors whose syndrome happens to equal a coset leader's are
    miscorrected to that leader's codeword.
    """
    ring = code.ring
    received = _received(code, r)
    quot, rem = divmod_coeffs(ring, received, code.gen.coeffs)
    if len(quot) < code.k:
        quot += [ZERO] * (code.k - len(quot))
    key = tuple(rem)
    error = table.entries.get(key)
    if error is None:
        raise Uncorrectable(Poly(ring, rem))
    fix = table._corrections.get(key)
    if fix is None:
        return DecodeResult(received, list(error), quot, key, ring)
    j, u, q_err = fix
    sub = ring.sub
    received[j] = sub(received[j], u)
    for i, c in q_err:
        quot[i] = sub(quot[i], c)
    return DecodeResult(received, list(error), quot, key, ring)
