"""Exact computations around the sequence w_n = (x - 2) w_{n-1} - w_{n-2} and
its factors Omega_d: discriminants, monogenicity, and Galois cyclicity."""

from .cyclotomic import (
    OmegaFactor,
    WFactorization,
    cyclotomic_poly,
    factor_w,
    omega,
    primitive_divisor,
    real_cyclotomic_poly,
)
from .galois import condition_c, even_quartic_class, omega_galois_report, real_cyclotomic_gal_cyclic
from .intpoly import IntPoly, discriminant, parse_poly, resultant
from .monogenicity import field_disc_real_cyclotomic, monogenic_verdict
from .sequences import SeqKind, term

__version__ = "0.1.0"
