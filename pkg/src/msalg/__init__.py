"""Finite principal MS-algebras: triple construction, congruence pairs, perfect extensions."""

from .congruence import (
    ConLattice,
    Congruence,
    all_congruences,
    brute_force_congruences,
    con_join,
    con_meet,
    generated_by_image,
    principal_congruence,
    restrict,
)
from .errors import MSAlgError
from .lattice import FinLattice, FinPoset, find_isomorphism, from_covers, is_distributive, principal_filter
from .ms import MSAlgebra, cone, is_principal_ms, make_ms, substructures, variety_of
from .triple import (
    construct,
    congruence_to_pair,
    kleene_parts_check,
    pair_to_congruence,
    pairs_of,
    validate_triple,
)

__version__ = "0.1.0"
