"""Exact-arithmetic tower of composition, Albert, and Brown algebras with
order-2 automorphism catalogs, Kac coordinate enumeration on (twisted)
extended E6 diagrams, and quaternion-algebra classification reports.

Everything is computed over Q (fractions) or F_p (p >= 5) with no floating
point anywhere; the real and p-adic places enter only as classification tags.
"""

from .albert import AlbertAlgebra, AlbertElem, hermitian, split_albert, tits
from .brown import BrownAlgebra, BrownElem
from .cayley import CDAlgebra, CompElem
from .fields import INFINITE, FieldSpec, Fp, Kbar, Q, Qp, Rplace, Scalar
from .involutions import Catalog, fixed_subalgebra, grade_decompose
from .kac import enumerate_solutions, load_diagram
from .kernels import BACKEND
from .linmaps import LinMap, dagger, is_aut_member, is_inv_member
from .quatclass import QuatPresentation, class_report, hilbert_symbol, is_split

__version__ = "0.1.0"

__all__ = [
    "AlbertAlgebra",
    "AlbertElem",
    "BACKEND",
    "BrownAlgebra",
    "BrownElem",
    "CDAlgebra",
    "Catalog",
    "CompElem",
    "FieldSpec",
    "Fp",
    "INFINITE",
    "Kbar",
    "LinMap",
    "Q",
    "Qp",
    "QuatPresentation",
    "Rplace",
    "Scalar",
    "class_report",
    "dagger",
    "enumerate_solutions",
    "fixed_subalgebra",
    "grade_decompose",
    "hermitian",
    "hilbert_symbol",
    "is_aut_member",
    "is_inv_member",
    "is_split",
    "load_diagram",
    "split_albert",
    "tits",
    "__version__",
]
