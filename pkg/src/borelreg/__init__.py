"""Monomial ideals of Borel type: decompositions, powers and regularity."""

from .borel import (
    RegularityReport,
    SequentialChain,
    chain_s_values,
    is_borel_type,
    is_borel_type_ass,
    is_borel_type_star,
    random_borel_ideal,
    regularity_bundle,
    regularity_irr,
    regularity_seq,
    reorder_to_borel,
    sat_quotient_top_degree,
    sequential_chain,
    symbolic_power,
)
from .betti import betti_numbers, regularity_oracle
from .decomposition import (
    IrreducibleComponent,
    PrimaryComponent,
    associated_primes,
    irreducible_decomposition,
    primary_decomposition,
    verify_decomposition,
)
from .ideal import MonomialIdeal
from .monomial import Monomial, RingContext
from .text import parse_document, parse_ideal, parse_monomial

__version__ = "0.1.0"
