"""Primes, canonical residues modulo an odd prime, and the Jacobi symbol.

Residues are always kept in [0, p-1].  Rationals are admitted wherever a
value is reduced mod p, provided p does not divide the denominator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import (
    DenominatorDivisibleError,
    EvenModulusError,
    ZeroInverseError,
)

Rational = Fraction


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit, ascending (odd-only bytearray sieve)."""
    if limit < 2:
        return []
    half = (limit - 1) // 2
    composite = bytearray(half + 1)  # slot j stands for 2j + 1
    for j in range(1, min((math.isqrt(limit) + 1) // 2, half) + 1):
        if not composite[j]:
            p = 2 * j + 1
            first = (p * p - 1) // 2
            if first > half:
                continue
            composite[first::p] = b"\x01" * len(range(first, half + 1, p))
    return [2] + [2 * j + 1 for j in range(1, half + 1) if not composite[j]]


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine at the scales used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


@lru_cache(maxsize=None)
def _checked_odd_prime(p: int) -> bool:
    return p >= 3 and p % 2 == 1 and is_prime(p)


class PrimeModulus:
    """An odd prime modulus, validated on construction."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not _checked_odd_prime(p):
            raise ValueError(f"modulus must be an odd prime, got {p}")
        self.p = p

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeModulus) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeModulus", self.p))

    def __repr__(self) -> str:
        return f"PrimeModulus({self.p})"


def inv_mod(a: int, p: int) -> int:
    """Inverse of a modulo the odd prime p, raising on a == 0 (mod p)."""
    a %= p
    if a == 0:
        raise ZeroInverseError(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


def frac_mod(q: Rational | int, p: int) -> int:
    """Reduce a rational (or integer) to its canonical residue mod p."""
    if isinstance(q, int):
        return q % p
    num, den = q.numerator, q.denominator
    if den % p == 0:
        raise DenominatorDivisibleError(f"{q} has denominator divisible by {p}")
    return num * pow(den, -1, p) % p


class Residue:
    """Canonical residue a mod p with the usual field arithmetic."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int | Rational, modulus: PrimeModulus):
        self.value = frac_mod(value, modulus.p)
        self.modulus = modulus

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus.p != self.modulus.p:
                raise ValueError("mixed moduli")
            return other.value
        return frac_mod(other, self.modulus.p)

    def __add__(self, other):
        return Residue(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.value - self._coerce(other), self.modulus)

    def __rsub__(self, other):
        return Residue(self._coerce(other) - self.value, self.modulus)

    def __mul__(self, other):
        return Residue(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Residue(
            self.value * inv_mod(self._coerce(other), self.modulus.p), self.modulus
        )

    def __rtruediv__(self, other):
        return Residue(
            self._coerce(other) * inv_mod(self.value, self.modulus.p), self.modulus
        )

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pow__(self, exp: int):
        return mod_pow(self, exp)

    def __eq__(self, other) -> bool:
        if isinstance(other, Residue):
            return other.modulus.p == self.modulus.p and other.value == self.value
        if isinstance(other, (int, Fraction)):
            return self.value == frac_mod(other, self.modulus.p)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.modulus.p))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Residue({self.value} mod {self.modulus.p})"


def mod_pow(base: Residue, exp: int) -> Residue:
    """base**exp for exp >= 0."""
    if exp < 0:
        raise ValueError("exponent must be non-negative; invert first")
    return Residue(pow(base.value, exp, base.modulus.p), base.modulus)


def mod_inv(a: Residue) -> Residue:
    return Residue(inv_mod(a.value, a.modulus.p), a.modulus)


def rational_residue(q: Rational | int, p: PrimeModulus) -> Residue:
    return Residue(q, p)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a|n) for odd positive n; (a|1) = 1.

    Computed by the binary reciprocity loop; returns -1, 0 or 1.
    """
    if n <= 0 or n % 2 == 0:
        raise EvenModulusError(f"Jacobi symbol needs odd positive bottom, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a mod odd prime p, or None when a is a non-residue."""
    a %= p
    if a == 0:
        return 0
    if jacobi(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    c = pow(z, q, p)
    x = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        t = t * b * b % p
        c = b * b % p
        m = i
    return x
