"""Polynomial growth functions of D0L-systems.

Decide whether a rational polynomial sends every natural number to a
positive integer and, if so, build a D0L-system whose growth function is
exactly that polynomial.
"""

from .d0l import (
    D0LSystem,
    ExpansionTooLarge,
    GrowthTable,
    Letter,
    UnknownLetter,
    advance_axiom,
    apply_morphism,
    expand,
    growth_length,
    growth_table,
    incidence_matrix,
    parikh_vector,
)
from .parser import NegativeExponent, NonIntegerExponent, ParseError, PolynomialSyntaxError, parse_polynomial
from .polynomial import (
    Member,
    NotMember,
    Polynomial,
    Reason,
    SearchCapExceeded,
    decide_membership,
    difference,
    evaluate,
    is_integer_valued,
    iterated_difference,
    iterated_difference_direct,
    shift_argument,
)
from .synthesizer import (
    InvalidConstant,
    NotInF,
    PreconditionViolated,
    SynthesisReport,
    compute_shift,
    synthesize_constant,
    synthesize_general,
    synthesize_restricted,
)
from .verifier import Method, VerificationOutcome, cross_check, verify_growth

__version__ = "0.1.0"
