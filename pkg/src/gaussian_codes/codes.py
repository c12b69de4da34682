"""Constacyclic codes over Gaussian residue rings: g(x) * h(x) = x^n - lambda."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import IdentityViolation, InvalidPrime, WrongModulusShape
from .gaussian import I, ONE, ZERO, GaussianInt
from .poly import Poly
from .ring import GaussianPrimeSpec, ResidueRing

__all__ = [
    "ConstacyclicCode",
    "build_quarter_code",
    "build_half_code",
    "build_multiprime_code",
    "generator_matrix",
    "parity_check_matrix",
    "encode",
    "is_codeword",
]


@dataclass(frozen=True, eq=False)
class ConstacyclicCode:
    ring: ResidueRing
    n: int
    lam: GaussianInt
    gen: Poly
    check: Poly = field(default=None)

    def __post_init__(self):
        ring = self.ring
        object.__setattr__(self, "lam", ring.elem(self.lam))
        modulus = Poly.x_pow_minus(ring, self.n, self.lam)
        if not self.gen.is_monic():
            raise IdentityViolation(f"generator {self.gen} is not monic")
        if self.check is None:
            q, r = modulus.divmod(self.gen)
            if r:
                raise IdentityViolation(f"{self.gen} does not divide x^{self.n} - ({self.lam}); remainder {r}")
            object.__setattr__(self, "check", q)
        if self.gen * self.check != modulus:
            raise IdentityViolation(f"gen * check != x^{self.n} - ({self.lam})")
        if self.k < 1:
            raise IdentityViolation(f"generator degree {self.gen.degree} leaves no message symbols")

    @property
    def k(self) -> int:
        return self.n - self.gen.degree

    @property
    def redundancy(self) -> int:
        return self.gen.degree

    def to_dict(self) -> dict:
        return {
            "ring": self.ring.to_dict(),
            "n": self.n,
            "lambda": list(self.lam),
            "gen": self.gen.to_json(),
            "check": self.check.to_json(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ConstacyclicCode":
        ring = ResidueRing.from_dict(data["ring"])
        gen = Poly(ring, (GaussianInt.coerce(c) for c in data["gen"]))
        check = Poly(ring, (GaussianInt.coerce(c) for c in data["check"])) if "check" in data else None
        return cls(ring, int(data["n"]), GaussianInt.coerce(data["lambda"]), gen, check)

    def __eq__(self, other):
        return (
            isinstance(other, ConstacyclicCode)
            and (self.ring, self.n, self.lam, self.gen, self.check)
            == (other.ring, other.n, other.lam, other.gen, other.check)
        )

    def __hash__(self):
        return hash((self.ring, self.n, self.lam, self.gen))


def _linear(ring, root) -> Poly:
    return Poly(ring, [ring.neg(ring.elem(root)), ONE])


def build_quarter_code(p, k_exp: int = 2, sign: str = "plus", root=None) -> ConstacyclicCode:
    """Length phi(p^k)/4 code over G_{pi^k}, gen = x - g with g^n = +-i."""
    if sign not in ("plus", "minus"):
        raise ValueError(f"sign must be 'plus' or 'minus', not {sign!r}")
    ring = ResidueRing.prime_power(p, k_exp)
    n = ring.euler_phi() // 4
    lam = ring.elem(I if sign == "plus" else -I)
    if root is None:
        g_plus, g_minus = ring.fourth_root_pair()
        root = g_plus if sign == "plus" else g_minus
    return ConstacyclicCode(ring, n, lam, _linear(ring, root))


def build_half_code(p, k_exp: int = 2, roots=None) -> ConstacyclicCode:
    """Length phi(p^k)/2 negacyclic code, gen = (x - g_plus)(x - g_minus)."""
    ring = ResidueRing.prime_power(p, k_exp)
    n = ring.euler_phi() // 2
    if roots is None:
        roots = ring.fourth_root_pair()
    if len(roots) != 2:
        raise ValueError("the half-length code needs exactly two roots")
    gen = Poly.from_roots(ring, roots)
    return ConstacyclicCode(ring, n, ring.elem(-1), gen)


def build_multiprime_code(primes: Sequence, length_from: int = 1, root=None) -> ConstacyclicCode:
    """Cyclic code of length phi(p_j) over G_{pi_1...pi_m}, gen = x - e.

    ``length_from`` is the 1-based index of the prime that fixes the length.
    """
    specs = [p if isinstance(p, GaussianPrimeSpec) else GaussianPrimeSpec.from_p(p) for p in primes]
    if len(specs) < 2:
        raise WrongModulusShape("multiprime codes need at least two distinct primes")
    ring = ResidueRing.product(specs)
    if not 1 <= length_from <= len(specs):
        raise ValueError(f"length_from {length_from} outside [1, {len(specs)}]")
    n = specs[length_from - 1].p - 1
    if root is None:
        root = ring.find_subgroup_generator(length_from)
    return ConstacyclicCode(ring, n, ring.elem(1), _linear(ring, root))


def generator_matrix(code: ConstacyclicCode) -> list[list[GaussianInt]]:
    """Row i holds the coefficients of x^i * g(x)."""
    g = list(code.gen.coeffs)
    return [[ZERO] * i + g + [ZERO] * (code.n - len(g) - i) for i in range(code.k)]


def parity_check_matrix(code: ConstacyclicCode) -> list[list[GaussianInt]]:
    """Row i is the reversed check polynomial shifted right by i."""
    k = code.k
    h = code.check
    rows = []
    for i in range(code.n - k):
        rows.append([h[k - (j - i)] if 0 <= j - i <= k else ZERO for j in range(code.n)])
    return rows


def encode(code: ConstacyclicCode, message: Sequence) -> list[GaussianInt]:
    """Non-systematic encoding c(x) = m(x) g(x)."""
    if len(message) != code.k:
        raise ValueError(f"message has length {len(message)}, code expects k = {code.k}")
    m = Poly(code.ring, message)
    return (m * code.gen).padded(code.n)


def is_codeword(code: ConstacyclicCode, v: Sequence) -> bool:
    if len(v) != code.n:
        raise ValueError(f"vector has length {len(v)}, code expects n = {code.n}")
    return not (Poly(code.ring, v) % code.gen)


def identity_violations(code: ConstacyclicCode) -> list[str]:
    """Human-readable failures of g*h = x^n - lambda and G*H^T = 0 (empty when sound)."""
    ring = code.ring
    problems = []
    if code.gen * code.check != Poly.x_pow_minus(ring, code.n, code.lam):
        problems.append(f"gen * check != x^{code.n} - ({code.lam})")
    G, H = generator_matrix(code), parity_check_matrix(code)
    for i, g_row in enumerate(G):
        for j, h_row in enumerate(H):
            acc = ZERO
            for a, b in zip(g_row, h_row):
                acc = ring.add(acc, ring.mul(a, b))
            if acc != ZERO:
                problems.append(f"G[{i}] . H[{j}] = {acc}")
    return problems
