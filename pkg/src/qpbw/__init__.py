"""Exact PBW bases for character Hopf algebras via Shirshov standard words."""
from .algebra import GPoly, Poly, Tensor
from .context import AbelianGroup, Character, QuantumContext, QuantumVariable
from .fields import Cyclotomic, PrimeField, RationalFunctions, Rationals, field_from_string
from .pbw import Presentation, enumerate_pbw, oracle_dimension

__all__ = [
    "AbelianGroup", "Character", "Cyclotomic", "GPoly", "Poly", "PrimeField", "Presentation",
    "QuantumContext", "QuantumVariable", "RationalFunctions", "Rationals", "Tensor",
    "enumerate_pbw", "field_from_string", "oracle_dimension",
]
__version__ = "0.1.0"
