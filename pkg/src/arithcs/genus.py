"""The genus group T+ and its character group Hom(T+, Z/2).

T+ is the even-weight subgroup of (Z/2)^r.  Its characters are vectors
c in (Z/2)^r modulo the all-ones vector, acting by x -> sum c_i x_i; we fix
the representative with c_r = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import gcd
from typing import Iterator, Sequence

from .errors import ArityMismatch, IndexOutOfRange, NotCoprime, ValidationError
from .ntcore import PrimeTuple, jacobi


def _bits(values: Sequence[int]) -> tuple[int, ...]:
    out = tuple(int(v) for v in values)
    if any(v not in (0, 1) for v in out):
        raise ValidationError(f"{values!r} is not a bit vector")
    return out


@dataclass(frozen=True)
class GenusElement:
    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", _bits(self.bits))
        if not self.bits:
            raise ValidationError("empty genus element")
        if sum(self.bits) % 2:
            raise ValidationError(f"{self.bits} has odd weight, not in T+")

    @property
    def r(self) -> int:
        return len(self.bits)

    def __add__(self, other: GenusElement) -> GenusElement:
        if self.r != other.r:
            raise ArityMismatch(f"arity {self.r} vs {other.r}")
        return GenusElement(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    @classmethod
    def e(cls, r: int, i: int, j: int) -> GenusElement:
        """e+_ij: ones in (1-based) slots i and j."""
        _check_pair(r, i, j)
        return cls(tuple(1 if k in (i, j) else 0 for k in range(1, r + 1)))

    @classmethod
    def basis(cls, r: int, i: int) -> GenusElement:
        """b_i = e+_{i,r}, for 1 <= i <= r-1."""
        return cls.e(r, i, r)


def t_plus(r: int) -> Iterator[GenusElement]:
    for bits in product((0, 1), repeat=r):
        if sum(bits) % 2 == 0:
            yield GenusElement(bits)


@dataclass(frozen=True)
class GenusCharacter:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _bits(self.coeffs))
        if not self.coeffs:
            raise ValidationError("empty character")
        if self.coeffs[-1] != 0:
            raise ValidationError("canonical character needs last coefficient 0; use GenusCharacter.canonical")

    @classmethod
    def canonical(cls, coeffs: Sequence[int]) -> GenusCharacter:
        """Normalize any representative by adding the all-ones vector if c_r = 1."""
        c = _bits(coeffs)
        if c and c[-1]:
            c = tuple(1 - v for v in c)
        return cls(c)

    @property
    def r(self) -> int:
        return len(self.coeffs)

    def is_trivial(self) -> bool:
        return not any(self.coeffs)

    def label(self) -> str:
        return "".join(map(str, self.coeffs))


def character_index(rho: GenusCharacter) -> int:
    """Position of rho in the canonical enumeration.

    Bit k-1 of the index is rho(e+_{k,k+1}).
    """
    c = rho.coeffs
    return sum((c[k] ^ c[k + 1]) << k for k in range(rho.r - 1))


def enumerate_characters(r: int) -> list[GenusCharacter]:
    """All 2^(r-1) characters of T+, trivial one first.

    Ordered by binary counting of the value table on e+_12, e+_23, ...,
    e+_{r-1,r}, with e+_12 the least significant bit.  For r = 3 this lists
    the coefficient vectors 000, 100, 110, 010.
    """
    if r < 1:
        raise ValidationError(f"r must be >= 1, got {r}")
    out = []
    for k in range(1 << (r - 1)):
        c = [0] * r
        # c_r = 0, then c_i = c_{i+1} xor rho(e_{i,i+1}) walking leftwards
        for i in range(r - 2, -1, -1):
            c[i] = c[i + 1] ^ ((k >> i) & 1)
        out.append(GenusCharacter(tuple(c)))
    return out


def eval_character(rho: GenusCharacter, x: GenusElement) -> int:
    if rho.r != x.r:
        raise ArityMismatch(f"character of arity {rho.r} applied to element of arity {x.r}")
    return sum(c & b for c, b in zip(rho.coeffs, x.bits)) % 2


def _check_pair(r: int, i: int, j: int) -> None:
    if not 1 <= i < j <= r:
        raise IndexOutOfRange(f"need 1 <= i < j <= {r}, got ({i}, {j})")


def eval_on_e(rho: GenusCharacter, i: int, j: int) -> int:
    """rho(e+_ij) with 1-based i < j."""
    _check_pair(rho.r, i, j)
    return rho.coeffs[i - 1] ^ rho.coeffs[j - 1]


def active_pairs(rho: GenusCharacter) -> list[tuple[int, int]]:
    """1-based pairs i < j with rho(e+_ij) = 1."""
    return [(i, j) for i, j in combinations(range(1, rho.r + 1), 2) if eval_on_e(rho, i, j)]


def support_set(rho: GenusCharacter) -> frozenset[int]:
    """J = {i : rho(b_i) = 1}, a subset of {1, ..., r-1}."""
    return frozenset(i for i in range(1, rho.r) if rho.coeffs[i - 1])


def genus_vector(m: int, t: PrimeTuple) -> tuple[tuple[int, ...], bool]:
    """Genus bits of an integer m (a candidate ideal norm) coprime to d.

    bit_i = 0 iff (m/p_i) = +1.  The flag says whether the vector lies in T+.
    """
    if m < 1:
        raise ValidationError(f"m must be positive, got {m}")
    if gcd(m, t.d) != 1:
        raise NotCoprime(f"{m} shares a factor with d = {t.d}")
    bits = tuple(0 if jacobi(m, p) == 1 else 1 for p in t)
    return bits, sum(bits) % 2 == 0


@dataclass(frozen=True)
class CSProfile:
    """CS value of every character, in canonical order.

    ``source`` names where the linking data came from (a prime tuple label
    or a link label).  ``supported`` is False when the computation was forced
    past a failed unit-norm check.
    """

    source: str
    entries: tuple[tuple[GenusCharacter, int], ...]
    supported: bool = True

    def __post_init__(self):
        if not self.entries:
            raise ValidationError("empty profile")
        r = self.entries[0][0].r
        if len(self.entries) != 1 << (r - 1):
            raise ValidationError(f"profile for r = {r} needs {1 << (r - 1)} entries, got {len(self.entries)}")
        if [rho for rho, _ in self.entries] != enumerate_characters(r):
            raise ValidationError("profile entries are not in canonical character order")

    @property
    def r(self) -> int:
        return self.entries[0][0].r

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.entries)

    @property
    def bits(self) -> str:
        return "".join(map(str, self.values))
