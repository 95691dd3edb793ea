"""Quasi-geodesic σ-definite braid words via word reversing and Garside quotients."""

from .classical import Splitting, alternating_nf, artin_context, delta, phi_apply, phi_breadth, phi_splitting, tail
from .dual import band_to_artin, dual_context, dual_sigma_definite, dual_splitting, dual_table
from .fractions import Fraction, GTForm, garside_fraction, garside_thurston, index_and_reduce
from .oracle import equivalent, fingerprint, geodesic_length
from .reversing import (
    GarsideContext,
    ReversedPair,
    divides_left,
    divides_right,
    left_gcd,
    left_reverse,
    right_reverse,
)
from .sigmadef import Order, SigmaClass, classify_sigma, dehornoy_compare, sigma_definite
from .words import (
    ARTIN,
    BAND,
    Artin,
    Band,
    BraidWord,
    Letter,
    WordError,
    artin_word,
    band_word,
    free_reduce,
    invert_word,
    is_positive,
    parse_word,
    print_word,
    word_index,
)

__all__ = [name for name in dir() if not name.startswith("_")]
