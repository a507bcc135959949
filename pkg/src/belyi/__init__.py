"""Classifying elements of cyclic Belyi curves v^n = u(1-u)^k."""

from .errors import (
    BelyiError,
    MultiplicityError,
    NotACommutatorError,
    NotACycleError,
    NotCoprimeError,
    RamificationError,
    RangeError,
    UnreducedError,
    UnsupportedInertiaError,
)
from .params import CurveParams, Residue, s_set, validate, fermat_auto_image
from .homology import (
    H1Class,
    WedgeClass,
    closed_form_delta,
    expand_T,
    t_decomposition,
    eps_h1,
    eps_wedge,
    substitute,
    general_inertia_delta,
    fermat_image,
    pfaffian_check,
)
from .words import Letter, Word, free_reduce, strip_placeholders, between, magnus_class
from .covering import gluing_table, lift_boundary_loop

__version__ = "0.1.0"
