"""Dense polynomials over a ResidueRing, coefficients in ascending degree."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import NonUnitLeadingCoefficient, NotAUnit, RingMismatch
from .gaussian import ONE, ZERO, GaussianInt
from .ring import ResidueRing

__all__ = ["Poly"]


def _trim(coeffs: list) -> tuple:
    end = len(coeffs)
    while end and coeffs[end - 1] == ZERO:
        end -= 1
    return tuple(coeffs[:end])


class _DivisionPlan:
    """Per-divisor state for long division: the inverse of the leading
    coefficient and, for each nonzero lower coefficient d_j, a memo of
    r - c * d_j keyed by (r, c)."""

    __slots__ = ("ring", "dd", "inv_lead", "low")

    def __init__(self, ring: ResidueRing, d: tuple):
        self.ring = ring
        self.dd = len(d) - 1
        lead = d[-1]
        if lead == ONE:
            self.inv_lead = None
        else:
            try:
                self.inv_lead = ring.inverse(lead)
            except NotAUnit:
                raise NonUnitLeadingCoefficient(f"leading coefficient {lead} is not a unit") from None
        self.low = [(j, dj, {}) for j, dj in enumerate(d[:-1]) if dj != ZERO]

    def run(self, f: Sequence) -> tuple[list, list]:
        dd = self.dd
        rem = list(f)
        if len(rem) <= dd:
            return [], rem + [ZERO] * (dd - len(rem))
        quot = [ZERO] * (len(rem) - dd)
        ring = self.ring
        inv_lead = self.inv_lead
        low = self.low
        for top in range(len(rem) - 1, dd - 1, -1):
            c = rem[top]
            if c == ZERO:
                continue
            if inv_lead is not None:
                c = ring.mul(c, inv_lead)
            shift = top - dd
            quot[shift] = c
            for j, dj, memo in low:
                pos = shift + j
                r = rem[pos]
                try:
                    rem[pos] = memo[r, c]
                except KeyError:
                    v = memo[r, c] = ring.sub(r, ring.mul(c, dj))
                    rem[pos] = v
        return quot, rem[:dd]


def divmod_coeffs(ring: ResidueRing, f: Sequence, d: Sequence) -> tuple[list, list]:
    """Long division on canonical ascending coefficient lists.

    Returns (quotient, remainder) with the remainder padded to len(d) - 1.
    """
    d = tuple(d)
    plans = ring._division_plans
    plan = plans.get(d)
    if plan is None:
        plan = _DivisionPlan(ring, d)
        if len(plans) < 64:
            plans[d] = plan
    return plan.run(f)


class Poly:
    """Immutable polynomial; ``coeffs[j]`` multiplies ``x**j``. Zero is ``()``."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: ResidueRing, coeffs: Iterable = ()):
        self.ring = ring
        self.coeffs = _trim([ring.elem(c) for c in coeffs])

    @classmethod
    def _raw(cls, ring: ResidueRing, coeffs: tuple) -> "Poly":
        # coeffs already canonical and trimmed
        obj = object.__new__(cls)
        obj.ring = ring
        obj.coeffs = coeffs
        return obj

    @classmethod
    def monomial(cls, ring: ResidueRing, degree: int, coeff=ONE) -> "Poly":
        return cls(ring, [ZERO] * degree + [coeff])

    @classmethod
    def x_pow_minus(cls, ring: ResidueRing, n: int, lam) -> "Poly":
        """x^n - lam."""
        return cls(ring, [ring.neg(ring.elem(lam))] + [ZERO] * (n - 1) + [ONE])

    @classmethod
    def from_roots(cls, ring: ResidueRing, roots: Sequence) -> "Poly":
        result = cls(ring, [ONE])
        for r in roots:
            result = result * cls(ring, [ring.neg(ring.elem(r)), ONE])
        return result

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> GaussianInt:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.elem(1)

    def __getitem__(self, j: int) -> GaussianInt:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else ZERO

    def padded(self, length: int) -> list[GaussianInt]:
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in length {length}")
        return list(self.coeffs) + [ZERO] * (length - len(self.coeffs))

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b, add = self.coeffs, other.coeffs, self.ring.add
        if len(a) < len(b):
            a, b = b, a
        out = [add(x, y) for x, y in zip(a, b)] + list(a[len(b):])
        return Poly._raw(self.ring, _trim(out))

    def __neg__(self) -> "Poly":
        neg = self.ring.neg
        return Poly._raw(self.ring, tuple(neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        ring = self.ring
        if not isinstance(other, Poly):
            c = ring.elem(other)
            return Poly._raw(ring, _trim([ring.mul(c, a) for a in self.coeffs]))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(ring, ())
        out = [ZERO] * (len(a) + len(b) - 1)
        add, mul = ring.add, ring.mul
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
        return Poly._raw(ring, _trim(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> "Poly":
        """x^k * self."""
        if not self.coeffs:
            return self
        return Poly._raw(self.ring, (ZERO,) * k + self.coeffs)

    def divmod(self, d: "Poly") -> tuple["Poly", "Poly"]:
        """(q, r) with self = d*q + r and deg r < deg d; d needs a unit leading coefficient."""
        self._check(d)
        if not d.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        q, r = divmod_coeffs(self.ring, self.coeffs, d.coeffs)
        return Poly._raw(self.ring, _trim(q)), Poly._raw(self.ring, _trim(r))

    def __floordiv__(self, d: "Poly") -> "Poly":
        return self.divmod(d)[0]

    def __mod__(self, d: "Poly") -> "Poly":
        return self.divmod(d)[1]

    def __call__(self, x0) -> GaussianInt:
        return self.eval(x0)

    def eval(self, x0) -> GaussianInt:
        ring = self.ring
        x0 = ring.elem(x0)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = ring.add(ring.mul(acc, x0), c)
        return acc

    def reciprocal(self) -> "Poly":
        """Coefficients reversed about deg(self)."""
        return Poly._raw(self.ring, _trim(list(reversed(self.coeffs))))

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.coeffs]

    def __repr__(self):
        return f"Poly({self.ring.delta}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            if c == ONE and j:
                terms.append(mono)
            else:
                terms.append(f"({c}){mono}")
        return " + ".join(terms)
