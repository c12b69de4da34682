"""Constacyclic codes over Gaussian-integer residue rings with Mannheim-weight-1 decoding."""

from .codes import (
    ConstacyclicCode,
    build_half_code,
    build_multiprime_code,
    build_quarter_code,
    encode,
    generator_matrix,
    identity_violations,
    is_codeword,
    parity_check_matrix,
)
from .errors import (
    GaussianCodeError,
    IdentityViolation,
    InvalidPrime,
    NoGenerator,
    NonUnitLeadingCoefficient,
    NotAUnit,
    RingMismatch,
    SyndromeCollision,
    TooLarge,
    Uncorrectable,
    WrongModulusShape,
)
from .gaussian import GaussianInt, associates, mannheim_weight, parse_gaussian, round_div, units
from .poly import Poly
from .ring import GaussianPrimeSpec, ResidueRing
from .syndrome import DecodeResult, SyndromeTable, build_table, decode, syndrome

__version__ = "0.1.0"
