"""Finite semigroups and their upfamily extensions (beta, phi, N2, lambda, upsilon)."""

from sext.errors import (
    CapExceededError,
    ClosureError,
    NotAssociativeError,
    SextError,
)
from sext.semigroup import (
    FiniteSemigroup,
    PropertyReport,
    check_associative,
    classify,
    direct_product,
    disjoint_ordered_union,
    idempotents,
    is_ideal,
    is_regular_element,
    make_cyclic,
    make_linear_semilattice,
    maximal_subgroup,
    reduced_product,
)
from sext.upfamily import Upfamily, generate, kind, member, product
from sext.extension import ExtensionClass, LabeledExtension, build_extension
from sext.iso import IsoWitness, find_isomorphism, is_isomorphic_to_family

__version__ = "0.1.0"
