"""Exact lattice-path toolkit for even-zeroed paths and Catalan convolutions."""

from .bijections import (
    chi,
    chi_inv,
    dyck_from_even_zeroed,
    dyck_split,
    even_zeroed_from_dyck,
    psi,
    psi_inv,
    split_at_first_2mod4_intercept,
    theorem9_backward,
    theorem9_forward,
)
from .errors import CapExceeded, CatconvError, DomainError, PathSyntaxError
from .paths import (
    Path,
    Sign,
    SignedDyckPath,
    SignedSeq,
    Step,
    concat,
    enumerate_balanced,
    enumerate_dyck,
    enumerate_paths,
    is_dyck,
    is_even_zeroed,
    parameter,
    parse_path,
    reflect,
    x_intercepts,
)
from .verifiers import VerificationReport, verify, verify_range

__version__ = "0.1.0"
