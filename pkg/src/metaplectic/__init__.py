"""Exact computations in metaplectic double covers of Sp(2n) and GSp(2n) over Q_p."""

from ._backend import BACKEND
from .characters import Character, GenuineCentralCharacter, abs_char, eta_char, omega_set, unramified
from .cover import (
    CocyclePath,
    CoverElement,
    cocycle_gsp,
    cocycle_sp,
    conj_by,
    cover_inverse,
    cover_mul,
    inverse_sign,
)
from .deciders import (
    PrincipalSeriesDatum,
    Status,
    Verdict,
    counterexample_build,
    gsp4_reducibility,
    odd_unitary_rule,
    weyl_orbit,
    whittaker_orbit_count,
)
from .errors import *  # noqa: F401,F403
from .padic import (
    FourthRoot,
    PadicContext,
    PsiSpec,
    SquareClass,
    eta,
    hilbert_oracle,
    hilbert_symbol,
    square_class,
    weil_factor,
    weil_gauss_oracle,
)
from .structure import CentralElement, LeviShape, center_image, center_mul, levi_type, z_t_reps
from .symplectic import GSpElement, bruhat_factor, cell_rank, make_gsp, x_of
from .torus import GenuineTorusChar, TorusRep, induce
from .verify import run_all, run_suite

__version__ = "0.1.0"
