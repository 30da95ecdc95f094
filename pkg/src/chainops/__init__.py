"""chainops: exact chain-level algebra for surjection complexes, MacLane
models, minimal resolutions, operad structure maps, and the Berger-Fresse
action, with every closed formula tested against its recursive
standard-procedure construction."""

from .complexes import ChainComplex, TensorComplex, act, augment, boundary, contract, rho
from .elements import Element
from .errors import GuardExceeded, InvalidInput, set_term_guard, term_guard
from .groups import CyclicGroup, ProductGroup, SymmetricGroup
from .perms import Perm, all_perms, block_perm, koszul_sign, parity
from .rings import GF, ZZ

__all__ = [
    "ChainComplex",
    "TensorComplex",
    "Element",
    "GuardExceeded",
    "InvalidInput",
    "CyclicGroup",
    "ProductGroup",
    "SymmetricGroup",
    "Perm",
    "GF",
    "ZZ",
    "act",
    "augment",
    "boundary",
    "contract",
    "rho",
    "all_perms",
    "block_perm",
    "koszul_sign",
    "parity",
    "set_term_guard",
    "term_guard",
]
