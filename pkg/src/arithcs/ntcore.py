"""Elementary exact number theory: symbols, primality, mod-2 linking of primes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Callable, Iterable

from .errors import DuplicatePrime, IndexOutOfRange, NotOneModFour, NotPrime, ValidationError
from .linking import Mod2LinkingMatrix

# Deterministic for every n < 3317044064679887385961981 (covers all 64-bit words).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981
WORD_LIMIT = 1 << 64


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n.

    Binary algorithm: strip factors of two using (2/n), then flip with
    reciprocity, tracking the sign as we go.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise ValidationError(f"Jacobi modulus must be an odd positive integer, got {n!r}")
    a %= n
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def legendre(a: int, p: int) -> int:
    return jacobi(a, p)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n below 2**64 (and somewhat beyond)."""
    if n < 2:
        return False
    if n >= _MR_LIMIT:
        raise ValueError(f"{n} is outside the deterministic primality range")
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _check_admissible_prime(p: int) -> None:
    if isinstance(p, bool) or not isinstance(p, int):
        raise ValidationError(f"{p!r} is not an integer")
    if p >= WORD_LIMIT:
        raise ValidationError(f"{p} exceeds the supported 64-bit range")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p % 4 != 1:
        raise NotOneModFour(f"{p} is not congruent to 1 mod 4")


@dataclass(frozen=True)
class PrimeTuple:
    """Strictly increasing primes p_1 < ... < p_r, each 1 mod 4.

    The field is K = Q(sqrt(d)) with d = p_1 ... p_r, which is also the
    discriminant of K.
    """

    primes: tuple[int, ...]

    def __post_init__(self):
        ps = tuple(self.primes)
        object.__setattr__(self, "primes", ps)
        if not ps:
            raise ValidationError("need at least one prime")
        for p in ps:
            _check_admissible_prime(p)
        for a, b in zip(ps, ps[1:]):
            if a == b:
                raise DuplicatePrime(f"prime {a} is repeated")
            if a > b:
                raise ValidationError(f"primes must be strictly increasing ({a} before {b})")

    @classmethod
    def of(cls, primes: Iterable[int]) -> PrimeTuple:
        """Sort the input first; duplicates are still rejected."""
        ps = sorted(primes)
        for a, b in zip(ps, ps[1:]):
            if a == b:
                raise DuplicatePrime(f"prime {a} is repeated")
        return cls(tuple(ps))

    @classmethod
    def parse(cls, text: str) -> PrimeTuple:
        """Parse ``"5,29,37"`` (order-insensitive)."""
        parts = [s.strip() for s in text.split(",")]
        if not parts or any(not s for s in parts):
            raise ValidationError(f"cannot parse prime list {text!r}")
        try:
            values = [int(s) for s in parts]
        except ValueError:
            raise ValidationError(f"cannot parse prime list {text!r}") from None
        return cls.of(values)

    @property
    def r(self) -> int:
        return len(self.primes)

    @cached_property
    def d(self) -> int:
        return prod(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __getitem__(self, i: int) -> int:
        return self.primes[i]

    def label(self) -> str:
        return "-".join(map(str, self.primes))


def lk2(p: int, q: int) -> int:
    """Mod-2 linking number of two primes: 0 if (p/q) = +1, 1 if (p/q) = -1."""
    if p == q:
        raise ValidationError(f"lk2 needs distinct primes, got {p} twice")
    _check_admissible_prime(p)
    _check_admissible_prime(q)
    # (p/q) = (q/p) by reciprocity since p = q = 1 mod 4; evaluate with the
    # smaller prime on top so the result is orientation independent by construction.
    lo, hi = min(p, q), max(p, q)
    return 0 if jacobi(lo, hi) == 1 else 1


def mod2_linking_matrix(t: PrimeTuple) -> Mod2LinkingMatrix:
    r = t.r
    rows = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            rows[i][j] = rows[j][i] = lk2(t[i], t[j])
    return Mod2LinkingMatrix.from_rows(rows, f"arithmetic:{t.label()}")


def alpha_cochain(n: int, g1: int, g2: int, g3: int) -> int:
    """Explicit 3-cochain on Z/n representing id cup Bockstein(id).

    alpha(g1, g2, g3) = g1 * (g2 + g3 - (g2 + g3 mod n)) / n  mod n, using
    representatives in [0, n).  The bracket is n exactly when g2 + g3 wraps,
    so this is g1 times the carry bit.
    """
    if n < 2:
        raise ValidationError(f"modulus must be >= 2, got {n}")
    for g in (g1, g2, g3):
        if not 0 <= g < n:
            raise IndexOutOfRange(f"{g} is not a residue in [0, {n})")
    carry = (g2 + g3 - (g2 + g3) % n) // n
    return g1 * carry % n


def coboundary3(n: int, f: Callable[[int, int, int], int], g1: int, g2: int, g3: int, g4: int) -> int:
    """(d f)(g1, g2, g3, g4) in Z/n for a 3-cochain f with trivial coefficients."""
    return (
        f(g2, g3, g4)
        - f((g1 + g2) % n, g3, g4)
        + f(g1, (g2 + g3) % n, g4)
        - f(g1, g2, (g3 + g4) % n)
        + f(g1, g2, g3)
    ) % n


def is_cocycle3(n: int, f: Callable[[int, int, int], int]) -> bool:
    """Exhaustive check of d f = 0 over all n**4 quadruples."""
    rng = range(n)
    return all(coboundary3(n, f, a, b, c, d) == 0 for a in rng for b in rng for c in rng for d in rng)


def alpha_is_cocycle(n: int) -> bool:
    return is_cocycle3(n, lambda a, b, c: alpha_cochain(n, a, b, c))
