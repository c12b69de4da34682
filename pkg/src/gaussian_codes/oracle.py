"""Brute-force cross-checks. Deliberately slow: no square-and-multiply, no
divisor pruning, no polynomial division where a direct enumeration works."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .codes import ConstacyclicCode, encode, generator_matrix
from .errors import NotAUnit, TooLarge, Uncorrectable
from .gaussian import ONE, ZERO, GaussianInt, mannheim_weight, units
from .ring import ResidueRing
from .syndrome import SyndromeTable, build_table, decode

__all__ = [
    "brute_residues",
    "brute_order",
    "brute_min_mannheim_distance",
    "monomial_syndromes",
    "exhaustive_decode_check",
    "DecodeReport",
]

RESIDUE_LIMIT = 10**5
CODEWORD_LIMIT = 10**7


def brute_residues(ring: ResidueRing) -> list[GaussianInt]:
    if ring.N > RESIDUE_LIMIT:
        raise TooLarge(f"N = {ring.N} exceeds {RESIDUE_LIMIT}")
    out = [ring.int_to_residue(m) for m in range(ring.N)]
    if len(set(out)) != ring.N:
        raise AssertionError(f"residue map modulo {ring.delta} is not injective")
    return out


def brute_order(ring: ResidueRing, x) -> int:
    if ring.euler_phi() > RESIDUE_LIMIT:
        raise TooLarge(f"phi(N) = {ring.euler_phi()} exceeds {RESIDUE_LIMIT}")
    one = ring.elem(ONE)
    acc = ring.elem(x)
    for t in range(1, ring.euler_phi() + 1):
        if acc == one:
            return t
        acc = ring.mul(acc, x)
    raise NotAUnit(f"{x} never reaches 1 modulo {ring.delta}")


def brute_min_mannheim_distance(code: ConstacyclicCode) -> int:
    """Minimum total Mannheim weight over every nonzero m * G."""
    ring = code.ring
    if ring.N**code.k > CODEWORD_LIMIT:
        raise TooLarge(f"{ring.N}^{code.k} codewords exceed {CODEWORD_LIMIT}")
    residues = brute_residues(ring)
    rows = generator_matrix(code)
    # every scalar multiple of every row, then sums over all combinations
    multiples = [[[ring.mul(a, x) for x in row] for a in residues] for row in rows]
    best = None
    zero = [ZERO] * code.n

    def walk(depth: int, acc: list, nonzero: bool):
        nonlocal best
        if depth == len(rows):
            if nonzero:
                w = sum(mannheim_weight(x) for x in acc)
                if best is None or w < best:
                    best = w
            return
        for idx, mult in enumerate(multiples[depth]):
            walk(depth + 1, [ring.add(a, b) for a, b in zip(acc, mult)], nonzero or idx != 0)

    walk(0, zero, False)
    return best


def monomial_syndromes(code: ConstacyclicCode) -> list[tuple[GaussianInt, ...]]:
    """x^j mod g(x) for j in [0, n), by repeated shift-and-subtract."""
    ring = code.ring
    r = code.gen.degree
    g = code.gen.padded(r + 1)
    cur = [ZERO] * r
    cur[0] = ring.elem(ONE) if r else ZERO
    if r == 0:
        return [()] * code.n
    out = []
    for _ in range(code.n):
        out.append(tuple(cur))
        top = cur[-1]
        cur = [ZERO] + cur[:-1]
        # x^r == -(g_0 + ... + g_{r-1} x^{r-1}) for monic g
        cur = [ring.sub(c, ring.mul(top, gj)) for c, gj in zip(cur, g[:r])]
    return out


@dataclass
class DecodeReport:
    trials: int = 0
    failures: list = field(default_factory=list)
    table_size: int = 0
    table_distinct: bool = True
    min_distance: Optional[int] = None

    @property
    def ok(self) -> bool:
        return not self.failures and self.table_distinct

    def merge(self, other: "DecodeReport") -> "DecodeReport":
        return DecodeReport(
            self.trials + other.trials,
            self.failures + other.failures,
            max(self.table_size, other.table_size),
            self.table_distinct and other.table_distinct,
            self.min_distance if self.min_distance is not None else other.min_distance,
        )

    def to_dict(self) -> dict:
        d = {"trials": self.trials, "failures": self.failures, "table_size": self.table_size}
        if self.min_distance is not None:
            d["min_distance"] = self.min_distance
        return d


def _messages(code: ConstacyclicCode, count: Optional[int], seed: int) -> Iterable[list]:
    residues = brute_residues(code.ring)
    if count is None:
        return (list(m) for m in itertools.product(residues, repeat=code.k))
    rng = random.Random(seed)
    return ([rng.choice(residues) for _ in range(code.k)] for _ in range(count))


def exhaustive_decode_check(
    code: ConstacyclicCode,
    table: Optional[SyndromeTable] = None,
    count: Optional[int] = 1000,
    seed: int = 42,
    max_failures: int = 20,
) -> DecodeReport:
    """Encode, add every weight-<=1 error, decode, compare.

    ``count=None`` enumerates every message instead of sampling.
    """
    if table is None:
        table = build_table(code)
    ring = code.ring
    report = DecodeReport(table_size=len(table))

    # table keys recomputed without polynomial division
    expected = {(ZERO,) * code.gen.degree}
    for mono in monomial_syndromes(code):
        for u in units():
            expected.add(tuple(ring.mul(ring.elem(u), c) for c in mono))
    report.table_distinct = len(expected) == 4 * code.n + 1 and expected == set(table.entries)

    # (position, unit, expected error vector); position None is the error-free trial
    trials_per_msg = [(None, None, [ZERO] * code.n)]
    for j in range(code.n):
        for u in units():
            e = [ZERO] * code.n
            e[j] = ring.elem(u)
            trials_per_msg.append((j, e[j], e))
    add = ring.add
    failures = report.failures
    n_failed = 0
    trials = 0
    for msg in _messages(code, count, seed):
        c = encode(code, msg)
        for j, u, e in trials_per_msg:
            trials += 1
            r = list(c)
            if j is not None:
                r[j] = add(r[j], u)
            try:
                res = decode(code, table, r)
                ok = res.codeword == c and res.error == e and res.message == msg
            except Uncorrectable:
                ok = False
            if not ok:
                n_failed += 1
                if n_failed <= max_failures:
                    failures.append({"message": [list(x) for x in msg], "error": None if j is None else [j, list(u)]})
    if n_failed > max_failures:
        failures.append({"truncated": n_failed - max_failures})
    report.trials = trials
    return report
