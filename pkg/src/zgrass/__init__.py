"""Exact Z-graded Grassmann algebras and their graded polynomial identities."""
from .checker import Verdict, Witness, is_identity
from .errors import BudgetExceeded, DegreeError, MismatchError, ParseError, UnsupportedInput, ZGrassError
from .fields import GF, QQ, parse_field
from .freealg import FreePoly, GVar, comm, substitute, to_text, var
from .grading import GradedAlgebra, GradingSpec, preset, quotient
from .grassmann import Element, parse_element
from .kernels import BACKEND
from .parser import parse_poly
from .rewrite import reduce_mod_I, to_pbw

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BudgetExceeded", "DegreeError", "Element", "FreePoly", "GF", "GVar", "GradedAlgebra",
    "GradingSpec", "MismatchError", "ParseError", "QQ", "UnsupportedInput", "Verdict", "Witness",
    "ZGrassError", "comm", "is_identity", "parse_element", "parse_field", "parse_poly", "preset",
    "quotient", "reduce_mod_I", "substitute", "to_pbw", "to_text", "var",
]
