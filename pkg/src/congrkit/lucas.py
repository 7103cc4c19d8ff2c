"""Lucas sequences U_n(P, Q), V_n(P, Q) exactly and modulo odd primes.

Both sequences satisfy x_{n+1} = P x_n - Q x_{n-1} with U_0 = 0, U_1 = 1,
V_0 = 2, V_1 = P.  The modular evaluator runs in O(log n) by index
doubling, carrying Q^n along:

    U_{2n} = U_n V_n,   V_{2n} = V_n^2 - 2 Q^n,
    U_{n+1} = (P U_n + V_n) / 2,   V_{n+1} = (P V_n + (P^2 - 4Q) U_n) / 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZeroError, IndexTooLargeError
from .modarith import PrimeModulus, Rational, Residue, frac_mod, inv_mod

EXACT_INDEX_LIMIT = 500


@dataclass(frozen=True)
class LucasParams:
    P: Rational
    Q: Rational

    def __post_init__(self):
        object.__setattr__(self, "P", Fraction(self.P))
        object.__setattr__(self, "Q", Fraction(self.Q))


@dataclass(frozen=True)
class LucasPair:
    u: Residue
    v: Residue
    n: int


def uv_mod(P: int, Q: int, n: int, p: int) -> tuple[int, int]:
    """(U_n, V_n) mod p for integer residues P, Q; the fast inner core."""
    if n == 0:
        return 0, 2 % p
    P %= p
    Q %= p
    inv2 = (p + 1) // 2  # inverse of 2 mod an odd prime
    disc = (P * P - 4 * Q) % p
    u, v, qn = 0, 2 % p, 1  # state at index m, plus Q^m
    for bit in bin(n)[2:]:
        u, v, qn = u * v % p, (v * v - 2 * qn) % p, qn * qn % p
        if bit == "1":
            u, v, qn = (
                (P * u + v) * inv2 % p,
                (P * v + disc * u) * inv2 % p,
                qn * Q % p,
            )
    return u, v


def lucas_uv_mod(params: LucasParams, n: int, p: PrimeModulus) -> LucasPair:
    """U_n and V_n reduced mod p; P, Q may be rationals with p-unit denominators."""
    if n < 0:
        raise ValueError("index must be non-negative")
    u, v = uv_mod(frac_mod(params.P, p.p), frac_mod(params.Q, p.p), n, p.p)
    return LucasPair(Residue(u, p), Residue(v, p), n)


def fibonacci_lucas_mod(n: int, p: PrimeModulus) -> LucasPair:
    """F_n = U_n(1, -1) and L_n = V_n(1, -1) mod p."""
    return lucas_uv_mod(LucasParams(1, -1), n, p)


def lucas_uv_exact(P: int, Q: int, n: int) -> tuple[int, int]:
    """Exact integer (U_n, V_n), guarded to n <= 500 to keep sizes sane."""
    if n > EXACT_INDEX_LIMIT:
        raise IndexTooLargeError(f"exact Lucas values guarded to n <= {EXACT_INDEX_LIMIT}")
    if n < 0:
        raise ValueError("index must be non-negative")
    u0, u1 = 0, 1
    v0, v1 = 2, P
    for _ in range(n):
        u0, u1 = u1, P * u1 - Q * u0
        v0, v1 = v1, P * v1 - Q * v0
    return u0, v0


def half_index_shift(
    pair: LucasPair, params: LucasParams, p: PrimeModulus
) -> tuple[Residue, Residue]:
    """(U_{n+1}, U_{n-1}) from (U_n, V_n): 2 U_{n+1} = P U_n + V_n and
    2 Q U_{n-1} = P U_n - V_n.  Raises when p divides Q."""
    pp = p.p
    P = frac_mod(params.P, pp)
    Q = frac_mod(params.Q, pp)
    if Q == 0:
        raise DivisionByZeroError(f"index shift needs p not dividing 2Q (p={pp})")
    inv2 = (pp + 1) // 2
    t = P * pair.u.value % pp
    up = (t + pair.v.value) * inv2 % pp
    um = (t - pair.v.value) * inv2 % pp * inv_mod(Q, pp) % pp
    return Residue(up, p), Residue(um, p)
