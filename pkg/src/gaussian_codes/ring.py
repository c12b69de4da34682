"""Residue rings Z[i]/(delta) for delta = pi^k or a product of distinct Gaussian primes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from sympy import factorint, isprime

from .errors import InvalidPrime, NoGenerator, NotAUnit, WrongModulusShape
from .gaussian import ONE, ZERO, GaussianInt, I, mannheim_weight, round_div

__all__ = ["GaussianPrimeSpec", "ResidueRing", "divides"]

MINUS_ONE = GaussianInt(-1, 0)
_CACHE_LIMIT = 1 << 20
MINUS_I = GaussianInt(0, -1)


def divides(w: GaussianInt, z: GaussianInt) -> bool:
    """True when w | z in Z[i]."""
    if not w:
        return not z
    return round_div(z, w) * w == z


@dataclass(frozen=True)
class GaussianPrimeSpec:
    pi: GaussianInt
    p: int

    def __post_init__(self):
        object.__setattr__(self, "pi", GaussianInt.coerce(self.pi))
        p = self.p
        if not isprime(p):
            raise InvalidPrime(f"{p} is not prime")
        if p % 4 != 1:
            raise InvalidPrime(f"{p} is not of the form 4n+1")
        if self.pi.norm() != p:
            raise InvalidPrime(f"norm({self.pi}) = {self.pi.norm()} != {p}")

    @property
    def n(self) -> int:
        return (self.p - 1) // 4

    @classmethod
    def from_p(cls, p: int) -> "GaussianPrimeSpec":
        """The prime a+bi over p with a > b > 0 (e.g. 2+i over 5, 3+2i over 13)."""
        if not isprime(p) or p % 4 != 1:
            raise InvalidPrime(f"{p} is not a prime of the form 4n+1")
        b = 1
        while 2 * b * b < p:
            a2 = p - b * b
            a = math.isqrt(a2)
            if a * a == a2:
                return cls(GaussianInt(a, b), p)
            b += 1
        raise AssertionError(f"no two-square decomposition found for prime {p}")


class ResidueRing:
    """G_delta, with canonical representatives from the rounding map
    mu(z) = z - [z * conj(delta) / N] * delta."""

    def __init__(self, factors: Iterable[tuple[GaussianPrimeSpec, int]]):
        factors = tuple((spec, int(k)) for spec, k in factors)
        if not factors:
            raise WrongModulusShape("a ring needs at least one prime factor")
        if len(factors) == 1:
            if factors[0][1] < 1:
                raise WrongModulusShape("exponent must be >= 1")
        else:
            if any(k != 1 for _, k in factors):
                raise WrongModulusShape("multi-prime moduli must be squarefree")
            ps = [spec.p for spec, _ in factors]
            if len(set(ps)) != len(ps):
                raise WrongModulusShape("multi-prime moduli need pairwise distinct norms")
        self.factors = factors
        delta = ONE
        for spec, k in factors:
            for _ in range(k):
                delta = delta * spec.pi
        self.delta = delta
        self.N = delta.norm()
        c, d = delta
        # G_delta ~ Z_N needs gcd(Re, Im) = 1
        if math.gcd(c, d) != 1:
            raise WrongModulusShape(f"{delta} has non-coprime real and imaginary parts")
        self._two_n = 2 * self.N
        # memo tables; keys are (re, im) pairs, values canonical
        self._canon_cache: dict = {}
        self._mul_cache: dict = {}
        self._sub_cache: dict = {}
        self._division_plans: dict = {}
        self._i_as_int = (-c * pow(d, -1, self.N)) % self.N

    @classmethod
    def prime_power(cls, prime, k: int = 1) -> "ResidueRing":
        spec = prime if isinstance(prime, GaussianPrimeSpec) else GaussianPrimeSpec.from_p(prime)
        return cls([(spec, k)])

    @classmethod
    def product(cls, primes: Sequence) -> "ResidueRing":
        specs = [p if isinstance(p, GaussianPrimeSpec) else GaussianPrimeSpec.from_p(p) for p in primes]
        if len(specs) < 2:
            raise WrongModulusShape("a product ring needs at least two primes")
        return cls([(s, 1) for s in specs])

    @property
    def is_prime_power(self) -> bool:
        return len(self.factors) == 1

    def __eq__(self, other):
        return isinstance(other, ResidueRing) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        parts = [f"({s.pi})^{k}" if k > 1 else f"({s.pi})" for s, k in self.factors]
        return f"ResidueRing({'*'.join(parts)} = {self.delta}, N={self.N})"

    # -- canonical representatives -------------------------------------

    def canonicalize(self, z) -> GaussianInt:
        try:
            return self._canon_cache[z]
        except KeyError:
            pass
        a, b = z
        c, d = self.delta
        n2 = self._two_n
        qr = (2 * (a * c + b * d) + self.N) // n2
        qi = (2 * (b * c - a * d) + self.N) // n2
        r = GaussianInt(a - qr * c + qi * d, b - qr * d - qi * c)
        if len(self._canon_cache) < _CACHE_LIMIT:
            self._canon_cache[z] = r
        return r

    def is_canonical(self, z) -> bool:
        return self.canonicalize(z) == z

    def elem(self, value) -> GaussianInt:
        """Canonical element from an int, a GaussianInt, a pair or a string."""
        return self.canonicalize(GaussianInt.coerce(value))

    # -- arithmetic -----------------------------------------------------

    def add(self, x, y) -> GaussianInt:
        return self.canonicalize((x[0] + y[0], x[1] + y[1]))

    def sub(self, x, y) -> GaussianInt:
        key = (x, y)
        try:
            return self._sub_cache[key]
        except KeyError:
            pass
        r = self.canonicalize((x[0] - y[0], x[1] - y[1]))
        if len(self._sub_cache) < _CACHE_LIMIT:
            self._sub_cache[key] = r
        return r

    def neg(self, x) -> GaussianInt:
        return self.canonicalize((-x[0], -x[1]))

    def mul(self, x, y) -> GaussianInt:
        key = (x, y)
        try:
            return self._mul_cache[key]
        except KeyError:
            pass
        a, b = x
        c, d = y
        r = self.canonicalize((a * c - b * d, a * d + b * c))
        if len(self._mul_cache) < _CACHE_LIMIT:
            self._mul_cache[key] = r
        return r

    def mannheim_distance(self, x, y) -> int:
        """w_M of the canonical difference x - y."""
        return mannheim_weight(self.sub(x, y))

    def _gcd_and_cofactor(self, x: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
        # extended Euclid on (delta, x): returns (g, s) with s*x = g mod delta
        r0, r1 = self.delta, GaussianInt.coerce(x)
        s0, s1 = ZERO, ONE
        while r1:
            q = round_div(r0, r1)
            r0, r1 = r1, r0 - q * r1
            s0, s1 = s1, s0 - q * s1
        return r0, s0

    def is_unit(self, x) -> bool:
        if not x:
            return self.N == 1
        g, _ = self._gcd_and_cofactor(x)
        return g.norm() == 1

    def inverse(self, x) -> GaussianInt:
        if not x:
            raise NotAUnit("0 has no inverse")
        g, s = self._gcd_and_cofactor(x)
        if g.norm() != 1:
            raise NotAUnit(f"{GaussianInt.coerce(x)} shares the factor {g} with {self.delta}")
        # g is a unit, so g^-1 = conj(g)
        return self.canonicalize(s * g.conj())

    def power(self, x, k: int) -> GaussianInt:
        if k < 0:
            return self.power(self.inverse(x), -k)
        result = self.canonicalize(ONE)
        base = self.canonicalize(x)
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    # -- Z_N isomorphism ------------------------------------------------

    def int_to_residue(self, m: int) -> GaussianInt:
        return self.canonicalize((m, 0))

    def residue_to_int(self, x) -> int:
        """The m in [0, N) with int_to_residue(m) == x (using i = -Re/Im mod N)."""
        m = (x[0] + x[1] * self._i_as_int) % self.N
        if self.int_to_residue(m) != x:
            raise RuntimeError(f"{x} is not a canonical residue of {self.delta}")
        return m

    def elements(self) -> list[GaussianInt]:
        return [self.int_to_residue(m) for m in range(self.N)]

    # -- unit group -----------------------------------------------------

    def euler_phi(self) -> int:
        phi = 1
        for spec, k in self.factors:
            phi *= spec.p ** (k - 1) * (spec.p - 1)
        return phi

    @cached_property
    def _phi_primes(self) -> tuple[int, ...]:
        return tuple(sorted(factorint(self.euler_phi())))

    def multiplicative_order(self, x) -> int:
        if not self.is_unit(x):
            raise NotAUnit(f"{x} is not a unit modulo {self.delta}")
        one = self.canonicalize(ONE)
        t = self.euler_phi()
        for q in self._phi_primes:
            while t % q == 0 and self.power(x, t // q) == one:
                t //= q
        return t

    def _is_generator(self, x) -> bool:
        phi = self.euler_phi()
        one = self.canonicalize(ONE)
        return all(self.power(x, phi // q) != one for q in self._phi_primes)

    def _unit_scan(self):
        # deterministic candidate order: 2, 3, 4, ... through the Z_N isomorphism
        for m in range(2, self.N):
            if math.gcd(m, self.N) == 1:
                yield self.int_to_residue(m)

    def find_generator(self) -> GaussianInt:
        if not self.is_prime_power:
            raise NoGenerator(f"the unit group modulo {self.delta} is not cyclic")
        if self.euler_phi() == 1:
            return self.canonicalize(ONE)
        for x in self._unit_scan():
            if self._is_generator(x):
                return x
        raise AssertionError("cyclic unit group without a generator")

    def fourth_root_pair(self) -> tuple[GaussianInt, GaussianInt]:
        """Generators (g_plus, g_minus) with g_plus^(phi/4) = i and g_minus^(phi/4) = -i.

        Negating a generator flips the sign of its phi/4-th power only when
        n = (p-1)/4 is odd; otherwise the missing sign is found by scanning.
        """
        if not self.is_prime_power:
            raise WrongModulusShape("fourth_root_pair needs a prime-power modulus")
        spec, _ = self.factors[0]
        quarter = self.euler_phi() // 4
        i, minus_i = self.canonicalize(I), self.canonicalize(MINUS_I)
        g = self.find_generator()
        v = self.power(g, quarter)
        if v not in (i, minus_i):
            raise AssertionError(f"generator {g} has {g}^{quarter} = {v}, not +-i")
        want = minus_i if v == i else i
        if spec.n % 2 == 1:
            other = self.neg(g)
        else:
            other = next(x for x in self._unit_scan() if self.power(x, quarter) == want and self._is_generator(x))
        return (g, other) if v == i else (other, g)

    def factor_index(self, p: int) -> int:
        """1-based position of the prime factor lying over p."""
        for j, (spec, _) in enumerate(self.factors, 1):
            if spec.p == p:
                return j
        raise WrongModulusShape(f"{p} is not a prime factor of N = {self.N}")

    def congruent_one_mod(self, x, j: int) -> bool:
        """x == 1 modulo the j-th prime factor (1-based)."""
        pi = self.factors[j - 1][0].pi
        return divides(pi, x - ONE)

    def find_subgroup_generator(self, which: int) -> GaussianInt:
        """Element of order phi(p_which) that is 1 modulo every other prime factor."""
        if self.is_prime_power:
            raise WrongModulusShape("subgroup generators need a multi-prime modulus")
        m = len(self.factors)
        if not 1 <= which <= m:
            raise ValueError(f"factor index {which} outside [1, {m}]")
        target = self.factors[which - 1][0].p - 1
        others = [j for j in range(1, m + 1) if j != which]
        for x in self._unit_scan():
            if all(self.congruent_one_mod(x, j) for j in others) and self.multiplicative_order(x) == target:
                return x
        raise AssertionError("no subgroup generator found")

    # -- serialization --------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "factors": [{"pi": list(spec.pi), "p": spec.p, "exp": k} for spec, k in self.factors],
            "delta": list(self.delta),
            "N": self.N,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ResidueRing":
        ring = cls(
            (GaussianPrimeSpec(GaussianInt.coerce(f["pi"]), int(f["p"])), int(f["exp"]))
            for f in data["factors"]
        )
        if "delta" in data and GaussianInt.coerce(data["delta"]) != ring.delta:
            raise WrongModulusShape(f"descriptor delta {data['delta']} != product of factors {list(ring.delta)}")
        if "N" in data and int(data["N"]) != ring.N:
            raise WrongModulusShape(f"descriptor N {data['N']} != {ring.N}")
        return ring
