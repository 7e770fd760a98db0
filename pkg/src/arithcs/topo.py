"""Double branched covers of S^3: CS/DW invariants from linking numbers.

A link enters only through its pairwise linking numbers, reduced mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import DWValue, cs_profile
from .errors import ArityMismatch, InvalidLensParams
from .genus import CSProfile, GenusCharacter, active_pairs, enumerate_characters
from .linking import IntegerLinkingMatrix, Mod2LinkingMatrix
from .ntcore import PrimeTuple, mod2_linking_matrix

__all__ = [
    "IntegerLinkingMatrix",
    "LensSpaceParams",
    "Mod2LinkingMatrix",
    "dictionary_check",
    "dictionary_profiles",
    "lens_cs",
    "lens_dw",
    "lens_signed_sum",
    "topo_cs",
    "topo_dw",
    "topo_profile",
]


def topo_cs(rho: GenusCharacter, L: IntegerLinkingMatrix) -> int:
    """sum_{i<j} rho(e+_ij) lk(K_i, K_j) mod 2, summing integer linking numbers."""
    if rho.r != L.r:
        raise ArityMismatch(f"character of arity {rho.r} against a {L.r}-component link")
    total = sum(L[i - 1, j - 1] for i, j in active_pairs(rho))
    return total % 2


def topo_profile(L: IntegerLinkingMatrix) -> CSProfile:
    entries = tuple((rho, topo_cs(rho, L)) for rho in enumerate_characters(L.r))
    return CSProfile(f"topological:{L.label}", entries)


def topo_dw(L: IntegerLinkingMatrix) -> DWValue:
    return DWValue.from_values(topo_profile(L).values)


@dataclass(frozen=True)
class LensSpaceParams:
    """Two-bridge link B(a, b); its double branched cover is L(a, b)."""

    a: int
    b: int

    def __post_init__(self):
        a, b = self.a, self.b
        if not (isinstance(a, int) and isinstance(b, int)) or isinstance(a, bool) or isinstance(b, bool):
            raise InvalidLensParams(f"a and b must be integers, got {a!r}, {b!r}")
        if not 0 < a < b:
            raise InvalidLensParams(f"need 0 < a < b, got a={a}, b={b}")
        if b % 2:
            raise InvalidLensParams(f"b must be even, got {b}")
        if gcd(a, b) != 1:
            raise InvalidLensParams(f"a and b must be coprime, gcd({a},{b}) = {gcd(a, b)}")


def lens_signed_sum(params: LensSpaceParams) -> int:
    """sum_{k=1}^{b/2} (-1)^floor((2k-1) a / b), exactly."""
    a, b = params.a, params.b
    return sum(-1 if ((2 * k - 1) * a // b) % 2 else 1 for k in range(1, b // 2 + 1))


def lens_cs(params: LensSpaceParams) -> int:
    """CS of the nonzero character for L(a, b)."""
    return lens_signed_sum(params) % 2


def lens_dw(params: LensSpaceParams) -> DWValue:
    # trivial character contributes CS = 0; the other contributes lens_cs
    return DWValue.from_values([0, lens_cs(params)])


def dictionary_profiles(t: PrimeTuple, force: bool = False) -> tuple[CSProfile, CSProfile]:
    """Arithmetic profile of t and the topological profile of a link sharing its lk2 matrix."""
    arith = cs_profile(t, force)
    M = mod2_linking_matrix(t)
    link = IntegerLinkingMatrix(M.entries, label=f"link-of-{t.label()}")
    return arith, topo_profile(link)


def dictionary_check(t: PrimeTuple, force: bool = False) -> bool:
    arith, topo = dictionary_profiles(t, force)
    same_profile = arith.entries == topo.entries
    same_dw = DWValue.from_values(arith.values).value == DWValue.from_values(topo.values).value
    return same_profile and same_dw
