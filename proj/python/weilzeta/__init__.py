"""Point counts over finite fields, Frobenius eigenvalues, local zeta functions,
weight-graded motives and Riemann's explicit formula for pi(x)."""

from fractions import Fraction
from pathlib import Path

from . import _core
from ._core import (  # noqa: F401
    Field,
    FrobeniusAlpha,
    Motive,
    PolySystem,
    PrimeCounter,
    WeilNumbers,
    WeilzetaError,
    ZeroTable,
    alpha_from_trace,
    alpha_power,
    arith,
    correction_term,
    count_affine,
    count_projective_space,
    count_projective_variety,
    count_sequence,
    curve_zeta,
    direct_sum,
    enumerate_field,
    hasse_alpha,
    lefschetz,
    li,
    load_zeros,
    make_field,
    motive_of_elliptic_curve,
    motive_of_projective_space,
    parse_motive,
    parse_system,
    predict_affine_count,
    rh_bound_ratio,
    riemann_approx,
    sieve_pi,
    tensor,
    trace_formula_count,
    verify_weil_rh,
    weil_numbers_from_counts,
)

ZERO_FILE = Path(__file__).resolve().parent / "data" / "zeta_zeros.txt"


def zeta_series(counts):
    """Coefficients of exp(sum N_n t^n / n) as Fractions."""
    return [Fraction(c) for c in _core.zeta_series(list(counts))]


def default_zeros():
    """The bundled table of the first 150 zeta-zero ordinates."""
    return load_zeros(str(ZERO_FILE))
