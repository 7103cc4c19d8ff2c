"""Gaussian and Eisenstein integer arithmetic and power-residue symbols.

The cubic symbol of a + b*w (w a primitive cube root of unity) for a
rational modulus m coprime to 3 is assembled multiplicatively from m's
prime factorization: an inert prime q = 2 (mod 3) contributes the Euler
power with exponent (q^2-1)/3 computed in the quotient ring mod q, and a
split prime q = 1 (mod 3) contributes the product of the characters at its
two conjugate prime ideals, each with exponent (q-1)/3.  The quartic symbol
for an odd prime modulus follows the same shape with i in place of w.

The product over conjugate ideals collapses to 1 on rational arguments, so
single-ideal characters are exposed separately; they are what carries the
"is a cube / fourth power" meaning for rational residues.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import (
    CongruenceError,
    DegenerateInputError,
    ModulusDivisibleBy3Error,
    NotCoprimeError,
)
from .modarith import inv_mod, sqrt_mod


@dataclass(frozen=True)
class GaussianInt:
    re: int
    im: int

    @property
    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __str__(self) -> str:
        return f"{self.re}{self.im:+d}i"


@dataclass(frozen=True)
class EisensteinInt:
    a: int
    b: int

    @property
    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def conj(self) -> "EisensteinInt":
        # conjugate of a + b w is (a - b) - b w
        return EisensteinInt(self.a - self.b, -self.b)

    def __mul__(self, other: "EisensteinInt") -> "EisensteinInt":
        # w^2 = -1 - w
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    def __str__(self) -> str:
        return f"{self.a}{self.b:+d}w"


@dataclass(frozen=True)
class UnityRoot3:
    exponent: int

    def __post_init__(self):
        if self.exponent not in (0, 1, 2):
            raise CongruenceError(f"exponent {self.exponent} not canonical")

    def __mul__(self, other: "UnityRoot3") -> "UnityRoot3":
        return UnityRoot3((self.exponent + other.exponent) % 3)

    def __str__(self) -> str:
        return f"w^{self.exponent}"


@dataclass(frozen=True)
class UnityRoot4:
    exponent: int

    def __post_init__(self):
        if self.exponent not in (0, 1, 2, 3):
            raise CongruenceError(f"exponent {self.exponent} not canonical")

    def __mul__(self, other: "UnityRoot4") -> "UnityRoot4":
        return UnityRoot4((self.exponent + other.exponent) % 4)

    def __str__(self) -> str:
        return f"i^{self.exponent}"


def _quad_pow(x0: int, x1: int, e: int, p: int, c0: int, c1: int) -> tuple[int, int]:
    """(x0 + x1 T)^e mod p in Z[T]/(T^2 - c1 T - c0)."""
    r0, r1 = 1, 0
    x0, x1 = x0 % p, x1 % p
    while e:
        if e & 1:
            r0, r1 = (r0 * x0 + r1 * x1 * c0) % p, (r0 * x1 + r1 * x0 + r1 * x1 * c1) % p
        x0, x1 = (x0 * x0 + x1 * x1 * c0) % p, (x1 * (2 * x0 + x1 * c1)) % p
        e >>= 1
    return r0, r1


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def _omega_roots(q: int) -> tuple[int, int]:
    """Both roots of t^2 + t + 1 = 0 mod a prime q = 1 (mod 3)."""
    s = sqrt_mod(-3 % q, q)
    if s is None:
        raise CongruenceError(f"-3 is a non-residue mod {q}")
    inv2 = inv_mod(2, q)
    t1 = (s - 1) * inv2 % q
    t2 = (-s - 1) * inv2 % q
    return (t1, t2) if t1 < t2 else (t2, t1)


def _match_root_power(r: int, t: int, order: int, q: int) -> int:
    cur = 1
    for j in range(order):
        if r == cur:
            return j
        cur = cur * t % q
    raise CongruenceError(f"{r} is not a power of {t} mod {q}")


def _cubic_exp_split(alpha: EisensteinInt, q: int, t: int) -> int:
    """Character exponent at the ideal of q where w maps to t."""
    x = (alpha.a + alpha.b * t) % q
    if x == 0:
        raise NotCoprimeError(f"{alpha} is not coprime to {q}")
    r = pow(x, (q - 1) // 3, q)
    return _match_root_power(r, t, 3, q)


def _cubic_exp_inert(alpha: EisensteinInt, q: int) -> int:
    r0, r1 = _quad_pow(alpha.a, alpha.b, (q * q - 1) // 3, q, -1, -1)
    targets = {(1, 0): 0, (0, 1): 1, ((q - 1) % q, (q - 1) % q): 2}
    key = (r0, r1)
    if key not in targets:
        raise CongruenceError(f"{alpha}^((q^2-1)/3) mod {q} is not a cube root of unity")
    return targets[key]


def _cubic_exp_prime(alpha: EisensteinInt, q: int) -> int:
    if q % 3 == 2:
        return _cubic_exp_inert(alpha, q)
    t1, t2 = _omega_roots(q)
    return (_cubic_exp_split(alpha, q, t1) + _cubic_exp_split(alpha, q, t2)) % 3


def cubic_symbol(alpha: EisensteinInt, m: int) -> UnityRoot3:
    """Cubic Jacobi symbol of alpha for a positive rational modulus m, 3 | m excluded."""
    if m <= 0 or m % 3 == 0:
        raise ModulusDivisibleBy3Error(f"modulus {m} must be positive and coprime to 3")
    if gcd(alpha.norm, m) != 1:
        raise NotCoprimeError(f"norm of {alpha} shares a factor with {m}")
    total = 0
    for q, e in _factorize(m):
        total = (total + e * _cubic_exp_prime(alpha, q)) % 3
    return UnityRoot3(total)


def cubic_character(alpha: EisensteinInt, q: int) -> UnityRoot3:
    """Single-ideal cubic character at a prime q: the canonical (smaller) root
    of t^2+t+1 when q = 1 (mod 3), the inert Euler power when q = 2 (mod 3).

    This is the object with residue meaning: for rational a coprime to a
    split q, the value is w^0 exactly when a is a cube mod q.
    """
    if q % 3 == 0:
        raise ModulusDivisibleBy3Error(f"prime {q} must be coprime to 3")
    if gcd(alpha.norm, q) != 1:
        raise NotCoprimeError(f"norm of {alpha} shares a factor with {q}")
    if q % 3 == 2:
        return UnityRoot3(_cubic_exp_inert(alpha, q))
    t1, _ = _omega_roots(q)
    return UnityRoot3(_cubic_exp_split(alpha, q, t1))


def _quartic_exp_split(alpha: GaussianInt, p: int, u: int) -> int:
    x = (alpha.re + alpha.im * u) % p
    if x == 0:
        raise NotCoprimeError(f"{alpha} is not coprime to {p}")
    r = pow(x, (p - 1) // 4, p)
    return _match_root_power(r, u, 4, p)


def _quartic_exp_inert(alpha: GaussianInt, p: int) -> int:
    r0, r1 = _quad_pow(alpha.re, alpha.im, (p * p - 1) // 4, p, -1, 0)
    targets = {(1, 0): 0, (0, 1): 1, ((p - 1) % p, 0): 2, (0, (p - 1) % p): 3}
    key = (r0, r1)
    if key not in targets:
        raise CongruenceError(f"{alpha}^((p^2-1)/4) mod {p} is not a fourth root of unity")
    return targets[key]


def quartic_symbol(alpha: GaussianInt, p: int) -> UnityRoot4:
    """Quartic Jacobi symbol of alpha for an odd prime p."""
    if p < 3 or p % 2 == 0:
        raise NotCoprimeError(f"modulus {p} must be an odd prime")
    if alpha.norm % p == 0:
        raise NotCoprimeError(f"norm of {alpha} is divisible by {p}")
    if p % 4 == 3:
        return UnityRoot4(_quartic_exp_inert(alpha, p))
    u = sqrt_mod(p - 1, p)
    if u is None:
        raise NotCoprimeError(f"{p} is not prime: -1 has no square root")
    return UnityRoot4((_quartic_exp_split(alpha, p, u) + _quartic_exp_split(alpha, p, p - u)) % 4)


def quartic_character(alpha: GaussianInt, p: int) -> UnityRoot4:
    """Single-ideal quartic character (canonical root of x^2+1) at an odd prime.

    For rational a and p = 1 (mod 4): value i^0 exactly when a is a fourth
    power mod p, and its square matches the quadratic character of a.
    """
    if p < 3 or p % 2 == 0:
        raise NotCoprimeError(f"modulus {p} must be an odd prime")
    if alpha.norm % p == 0:
        raise NotCoprimeError(f"norm of {alpha} is divisible by {p}")
    if p % 4 == 3:
        return UnityRoot4(_quartic_exp_inert(alpha, p))
    u = sqrt_mod(p - 1, p)
    if u is None:
        raise NotCoprimeError(f"{p} is not prime: -1 has no square root")
    return UnityRoot4(_quartic_exp_split(alpha, p, min(u, p - u)))


def k_factor(u: int, v: int, d: int) -> int:
    """The auxiliary multiplier k(u, v, d) built from u^2 - d v^2.

    Writing u^2 - d v^2 = 2^alpha 3^r W with W coprime to 6, and w for the
    product of the distinct primes of W:
      k2 = 2 when d = 2, 3 (mod 4), or when d = 1 (mod 8) with alpha > 0 and
           alpha = 0, 1 (mod 3); else 1.
      k3 = 3^(ord3(v)+1) when 3 | r and 3 does not divide u;
           9 when 3 does not divide r or u;
           3 when r is not 2 (mod 3), 3 | u and 9 does not divide u;
           else 1.
      k  = k2 k3 w / gcd(u, w).
    """
    n = u * u - d * v * v
    if d == 0 or v == 0 or n == 0 or gcd(u, v) != 1:
        raise DegenerateInputError(f"k({u},{v},{d}) needs d v (u^2 - d v^2) != 0, gcd(u,v)=1")
    m = abs(n)
    alpha = 0
    while m % 2 == 0:
        m //= 2
        alpha += 1
    r = 0
    while m % 3 == 0:
        m //= 3
        r += 1
    w = 1
    for q, _ in _factorize(m):
        w *= q
    if d % 4 in (2, 3):
        k2 = 2
    elif d % 8 == 1 and alpha > 0 and alpha % 3 in (0, 1):
        k2 = 2
    else:
        k2 = 1
    ord3v = 0
    vv = abs(v)
    while vv % 3 == 0:
        vv //= 3
        ord3v += 1
    if r % 3 == 0 and u % 3 != 0:
        k3 = 3 ** (ord3v + 1)
    elif r % 3 != 0 and u % 3 != 0:
        k3 = 9
    elif (r - 2) % 3 != 0 and u % 3 == 0 and u % 9 != 0:
        k3 = 3
    else:
        k3 = 1
    return k2 * k3 * w // gcd(abs(u), w)
