"""Exact canonical bases of level-one Fock spaces in affine types A1 and A2,
the maps comparing them, and closed formulas for Rouquier weight spaces."""

__version__ = "0.1.0"

from .qpoly import LaurentPoly, TPoly, parse_laurent  # noqa: E402
from .fock import CanonicalBasisMatrix, FockVector  # noqa: E402
from .fock_a1 import llt_canonical_basis  # noqa: E402
from .fock_a2 import canonical_basis_a2  # noqa: E402
from .compare import NiceContext  # noqa: E402

__all__ = [
    "__version__",
    "LaurentPoly",
    "TPoly",
    "parse_laurent",
    "CanonicalBasisMatrix",
    "FockVector",
    "llt_canonical_basis",
    "canonical_basis_a2",
    "NiceContext",
]
