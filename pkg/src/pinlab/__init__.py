"""Finite pinning properties, augmentation operators and their verification."""

from .augment import AugSpec, parametric_aug, separative_aug, transitive_aug
from .endo import EndoFamily, EndoFn, check_side_condition, endomorphisms
from .kernels import IMPLEMENTATION
from .pinning import PROPERTIES, check_property
from .relation import Relation, classify, make_relation

__version__ = "0.1.0"

__all__ = [
    "AugSpec", "EndoFamily", "EndoFn", "PROPERTIES", "Relation", "check_property", "check_side_condition",
    "classify", "endomorphisms", "IMPLEMENTATION", "make_relation", "parametric_aug", "separative_aug",
    "transitive_aug",
]
