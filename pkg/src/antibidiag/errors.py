"""Exception hierarchy shared by all modules."""


class AntibidiagError(Exception):
    """Base class for all package errors."""


class BackendUnsupported(AntibidiagError):
    """Operation requires a capability the active scalar backend lacks."""


class IndexOutOfRange(AntibidiagError):
    pass


class DuplicateRoots(AntibidiagError):
    """Roots closer than the separation threshold."""


class NoSignChange(AntibidiagError):
    """A bisection bracket does not straddle a root."""


class NonPositiveEntry(AntibidiagError):
    """A coefficient vector entry is not strictly positive."""


class SizeMismatch(AntibidiagError):
    pass


class StructuralZero(AntibidiagError):
    """A required structural entry of an anti-bidiagonal pattern is zero."""


class SpectrumError(AntibidiagError):
    """Base class for spectrum validation rejections."""


class EmptyInput(SpectrumError):
    pass


class NonPositiveLead(SpectrumError):
    """First spectrum element is not strictly positive."""


class NotAlternating(SpectrumError):
    """Sign pattern +, -, +, ... is broken."""


class NotStrictlyDecreasingModulus(SpectrumError):
    """Absolute values fail to decrease strictly."""


class TooSmall(AntibidiagError):
    """Input dimension below the operation's minimum."""


class NonPositiveA(AntibidiagError):
    """A squared codiagonal entry came out non-positive during reconstruction."""


class TerminalMismatch(AntibidiagError):
    """Reconstruction did not terminate at the expected degree-1/degree-0 polynomials."""


class InterlaceViolation(AntibidiagError):
    """Strict root interlacing certificate failed."""


class NotTridiagonal(AntibidiagError):
    pass


class TooLarge(AntibidiagError):
    """Combinatorial guard on minor enumeration exceeded."""


class NotDecreasing(AntibidiagError):
    """Positive tuple is not strictly decreasing."""


class NonPositive(AntibidiagError):
    """Positive tuple contains a non-positive element."""
