"""A decidable fragment of the Baire space: eventually periodic data."""

from .forms import (
    CLOSED_FORMS,
    Comparison,
    closed_form,
    compare,
    correct_witness_tau,
    find_correcting_shift,
    pin_witness_nleq_star,
    two_step_witness,
    where_gt,
)
from .inj import BAInj, Pi0Endo, Pi1Endo, compose, enum_injection, evens, odds, parse_bainj, project
from .sampling import random_pair, random_upseq, sample_family
from .seq import UPSeq, UPSet, interleave, join, meet, parse_upseq, parse_upset
from .witnesses import NON_ARROWS, NonArrow, non_arrow, nontransitivity_certificate

__all__ = [
    "BAInj", "CLOSED_FORMS", "Comparison", "NON_ARROWS", "NonArrow", "Pi0Endo", "Pi1Endo",
    "UPSeq", "UPSet", "closed_form", "compare", "compose", "correct_witness_tau", "enum_injection",
    "evens", "find_correcting_shift", "interleave", "join", "meet", "non_arrow", "odds",
    "parse_bainj", "parse_upseq", "parse_upset", "pin_witness_nleq_star", "project",
    "random_pair", "random_upseq", "sample_family", "two_step_witness", "where_gt", "nontransitivity_certificate",
]
