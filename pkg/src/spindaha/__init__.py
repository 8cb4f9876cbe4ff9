"""Exact arithmetic in trigonometric double affine Hecke-Clifford algebras and
their spin counterparts for Weyl types A, B and D."""

from .clifford import CliffordAlgebra, clifford
from .extweyl import ExtWeylElem, ExtWeylGroup, ext_group
from .heckecliff import Params, THCAlgebra, thc
from .isoverify import iso_big, iso_fin, verify_iso_big, verify_iso_fin, verify_wang, wang
from .parse import ParseError, parse
from .report import Check, Report
from .scalar import ParamPoly, Scalar
from .smash import smash
from .spinhecke import TSHAlgebra, tsh
from .spinweyl import SpinWeylAlgebra, spin_algebra, verify_spin_presentation
from .thcverify import center_check, equal, pbw_probe, verify_thc_presentation
from .tshverify import tsh_center_check, verify_tsh_presentation
from .weyl import IntegrityError, WeylElem, WeylType

__version__ = "0.1.0"

__all__ = [
    "CliffordAlgebra",
    "clifford",
    "ExtWeylElem",
    "ExtWeylGroup",
    "ext_group",
    "Params",
    "THCAlgebra",
    "thc",
    "iso_big",
    "iso_fin",
    "verify_iso_big",
    "verify_iso_fin",
    "verify_wang",
    "wang",
    "ParseError",
    "parse",
    "Check",
    "Report",
    "ParamPoly",
    "Scalar",
    "smash",
    "TSHAlgebra",
    "tsh",
    "SpinWeylAlgebra",
    "spin_algebra",
    "verify_spin_presentation",
    "center_check",
    "equal",
    "pbw_probe",
    "verify_thc_presentation",
    "tsh_center_check",
    "verify_tsh_presentation",
    "IntegrityError",
    "WeylElem",
    "WeylType",
]
