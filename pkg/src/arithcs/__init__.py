"""Mod-2 arithmetic Chern-Simons and Dijkgraaf-Witten invariants.

Real quadratic fields Q(sqrt(p_1 ... p_r)) with every p_i = 1 mod 4, and
the matching invariants of double branched covers of S^3.
"""

from .arith import DWValue, cs_additive, cs_multiplicative, cs_profile, cs_via_kummer, dw_invariant, kummer_data
from .errors import (
    ArityMismatch,
    ArithCSError,
    DuplicatePrime,
    IndexOutOfRange,
    InvalidLensParams,
    NonSymmetric,
    NormNotMinusOne,
    NotCoprime,
    NotOneModFour,
    NotPrime,
    NotSquarefree,
    PerfectSquare,
    SchemaError,
    ValidationError,
)
from .genus import (
    CSProfile,
    GenusCharacter,
    GenusElement,
    enumerate_characters,
    eval_character,
    eval_on_e,
    genus_vector,
    support_set,
)
from .linking import IntegerLinkingMatrix, Mod2LinkingMatrix
from .ntcore import PrimeTuple, alpha_cochain, alpha_is_cocycle, is_prime, jacobi, lk2, mod2_linking_matrix
from .pell import (
    ContinuedFractionExpansion,
    FieldReport,
    cf_sqrt,
    fundamental_pell_solution,
    fundamental_unit_norm,
    validate_field,
)
from .topo import LensSpaceParams, dictionary_check, lens_cs, lens_dw, lens_signed_sum, topo_cs, topo_dw

__version__ = "0.1.0"
