"""Dessins d'enfants, the filling multicurves they encode, and their length minima."""

from .dessin import Dessin, new_dessin, passport, genus, classify, canonical_form, are_equivalent
from .errors import DessinError
from .perm import Permutation, from_cycles, parse_permutation

__version__ = "0.1.0"

__all__ = [
    "Dessin",
    "DessinError",
    "Permutation",
    "are_equivalent",
    "canonical_form",
    "classify",
    "from_cycles",
    "genus",
    "new_dessin",
    "parse_permutation",
    "passport",
]
