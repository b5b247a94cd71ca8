"""Exception types raised across the algebra tower."""


class AlgebraError(ValueError):
    """Base class for every structured error in this package."""


class MixedFields(AlgebraError):
    """Arithmetic attempted between scalars of different fields."""


class DivisionByZero(AlgebraError):
    pass


class NonArithmeticField(AlgebraError):
    """Element arithmetic requested on a classification-only field tag."""


class AlgebraMismatch(AlgebraError):
    """Binary operation on elements of different algebra instances."""


class ModelMismatch(AlgebraError):
    """Operation requires the other Albert model (Hermitian vs Tits)."""


class SingularElement(AlgebraError):
    """Inverse-like operation on an element with vanishing cubic norm."""


class ZeroMultiplier(AlgebraError):
    pass


class NotUnimodular(AlgebraError):
    """tits_phi factor with determinant different from 1."""


class CarrierMismatch(AlgebraError):
    """Linear maps composed or applied across incompatible carrier spaces."""


class NotNormPreserving(AlgebraError):
    """Map failed the cubic-norm invariance check."""


class NotAutomorphism(AlgebraError):
    """Map failed the algebra-automorphism check."""


class NotOrderTwo(AlgebraError):
    pass


class NotCommuting(AlgebraError):
    pass


class NotUnitNorm(AlgebraError):
    """make_t parameter with quadratic norm different from 1."""


class NoValidOrdering(AlgebraError):
    """No within-block basis permutation makes the anti-diagonal map an automorphism."""


class NoSuchV(AlgebraError):
    """Octonion search for v with q(v) = -1, <v,e> = 0 exhausted (non-split model)."""


class ZeroParameter(AlgebraError):
    pass


class ArityMismatch(AlgebraError):
    pass


class FormNotInvariant(AlgebraError):
    """Bilinear form is not invariant under the supplied order-2 map."""


class ZeroArgument(AlgebraError):
    """Hilbert symbol argument is zero."""


class UnrecognizedType(AlgebraError):
    """Residual diagram component outside the supported Dynkin catalog."""


class SingularGram(AlgebraError):
    """Trace-form Gram matrix unexpectedly singular (internal error)."""
