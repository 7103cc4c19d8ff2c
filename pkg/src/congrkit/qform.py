"""Integral binary quadratic forms of negative discriminant.

[a, b, c] stands for a x^2 + b x y + c y^2.  Provides reduction to the
canonical representative, enumeration of the primitive reduced forms of a
discriminant, exhaustive representation search for a target value, the
two-squares decomposition of p = 1 (mod 4), and classification of a prime
into exactly one class of a supplied list of forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import (
    InvalidDiscriminantError,
    MultipleClassesRepresentError,
    NoneRepresentsError,
    NonNegativeDiscriminantError,
    NotOneModFourError,
    OutOfRangeError,
)
from .modarith import sqrt_mod


@dataclass(frozen=True)
class QuadForm:
    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def opposite(self) -> "QuadForm":
        return QuadForm(self.a, -self.b, self.c)

    def value(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (-a < b <= a <= c):
            return False
        return b >= 0 or a != c

    def __str__(self) -> str:
        return f"[{self.a},{self.b},{self.c}]"


@dataclass(frozen=True)
class Representation:
    x: int
    y: int
    form: QuadForm
    p: int

    def __post_init__(self):
        if self.form.value(self.x, self.y) != self.p:
            raise OutOfRangeError(f"({self.x},{self.y}) does not solve {self.form} = {self.p}")


def _check_definite(f: QuadForm):
    if f.disc >= 0:
        raise NonNegativeDiscriminantError(f"{f} has discriminant {f.disc} >= 0")
    if f.a <= 0:
        raise OutOfRangeError(f"{f} is not positive definite")


def reduce(f: QuadForm) -> QuadForm:
    """Canonical reduced form of f's class, by alternating translation
    [a,b,c] -> [a, b+2ak, a k^2 + b k + c] and swap [a,b,c] -> [c,-b,a]."""
    _check_definite(f)
    a, b, c = f.a, f.b, f.c
    while True:
        # translate b into (-a, a]
        if not -a < b <= a:
            k = (a - b) // (2 * a)
            c = a * k * k + b * k + c
            b = b + 2 * a * k
        if a > c or (a == c and b < 0):
            a, b, c = c, -b, a
            continue
        return QuadForm(a, b, c)


def class_group(D: int) -> list[QuadForm]:
    """All primitive reduced forms of discriminant D < 0, sorted by (a, b)."""
    if D >= 0 or D % 4 not in (0, 1):
        raise InvalidDiscriminantError(f"{D} is not a negative discriminant")
    out = []
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if a == c and b < 0:
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            out.append(QuadForm(a, b, c))
        a += 1
    return sorted(out, key=lambda f: (f.a, f.b))


def represent(f: QuadForm, p: int) -> list[Representation]:
    """All integer (x, y) with f(x, y) = p, sorted by (x, y).

    Complete: any solution has |y| <= sqrt(4 a p / |D|), so scanning y in
    that window and solving the quadratic in x finds everything.
    """
    _check_definite(f)
    target = int(p)
    if target <= 0:
        return []
    d = -f.disc
    ymax = isqrt(4 * f.a * target // d) + 1
    found = []
    for y in range(-ymax, ymax + 1):
        # a x^2 + (b y) x + (c y^2 - target) = 0
        bb = f.b * y
        disc = bb * bb - 4 * f.a * (f.c * y * y - target)
        if disc < 0:
            continue
        s = isqrt(disc)
        if s * s != disc:
            continue
        for sign in ((1,) if s == 0 else (1, -1)):
            num = -bb + sign * s
            if num % (2 * f.a) == 0:
                found.append(Representation(num // (2 * f.a), y, f, target))
    return sorted(found, key=lambda r: (r.x, r.y))


def two_squares(p: int) -> tuple[int, int]:
    """(c, d) with p = c^2 + d^2, c odd, d even, both positive."""
    if p % 4 != 1:
        raise NotOneModFourError(f"{p} is not 1 mod 4")
    root = sqrt_mod(p - 1, p)
    if root is None:
        raise NotOneModFourError(f"{p} is not prime: -1 has no square root")
    a, b = p, min(root, p - root)
    while b * b > p:
        a, b = b, a % b
    c, d = b, isqrt(p - b * b)
    if c % 2 == 0:
        c, d = d, c
    return c, d


@dataclass(frozen=True)
class ClassMatch:
    index: int
    representations: tuple[Representation, ...]


def classify_by_class(p: int, D: int, targets: list[QuadForm]) -> ClassMatch:
    """Index of the unique class among targets representing p, with witnesses.

    Targets are grouped with their opposites [a,-b,c] (same represented set)
    and with any other listed form of the same reduced class.  Exactly one
    group must represent p; anything else signals a misencoded case table.
    """
    buckets: dict[QuadForm, list[int]] = {}
    for i, f in enumerate(targets):
        if f.disc != D:
            raise InvalidDiscriminantError(f"{f} has discriminant {f.disc}, not {D}")
        key = min(reduce(f), reduce(f.opposite()), key=lambda g: (g.a, g.b, g.c))
        buckets.setdefault(key, []).append(i)
    hits = []
    for key, idxs in buckets.items():
        reps = represent(targets[idxs[0]], p)
        if reps:
            hits.append((idxs[0], reps))
    if not hits:
        raise NoneRepresentsError(f"no target class of discriminant {D} represents {p}")
    if len(hits) > 1:
        raise MultipleClassesRepresentError(
            f"classes {[str(targets[i]) for i, _ in hits]} all represent {p}"
        )
    index, reps = hits[0]
    return ClassMatch(index, tuple(reps))
