"""Exception types shared across the package."""


class CrossbraidError(Exception):
    """Base class for all domain errors raised by this package."""


class NotAGroup(CrossbraidError):
    """Multiplication table fails a group axiom."""


class UnknownBuiltin(CrossbraidError):
    """Builtin group name not recognised."""


class InvalidElement(CrossbraidError):
    """Element id out of range or not in the required subgroup."""


class GroupTooLarge(CrossbraidError):
    """Group order exceeds the configured bound for this operation."""


class NotNormal(CrossbraidError):
    """Subgroup is not normal in its parent."""


class NotAbelian(CrossbraidError):
    """Operation requires an abelian group."""


class NotAHomomorphism(CrossbraidError):
    """Map does not respect the group operations (or module actions)."""


class NotSurjective(CrossbraidError):
    """Homomorphism is not onto its stated target."""


class NotCentral(CrossbraidError):
    """Subgroup is not contained in the centre."""


class DegreeTooHigh(CrossbraidError):
    """Cochain degree outside the supported range."""


class BudgetExceeded(CrossbraidError):
    """Requested computation exceeds the configured size budget."""


class NonTrivialAction(CrossbraidError):
    """Operation is only implemented for trivial coefficient actions."""


class NotACocycle(CrossbraidError):
    """Cochain fails the cocycle condition."""


class BetaNotCocycle(NotACocycle):
    """Conjugation 2-cochain attached to a twisted group datum is not a cocycle."""


class ParentMismatch(CrossbraidError):
    """Objects belong to different ambient data and cannot be combined."""


class InvalidGrading(CrossbraidError):
    """Grading specification is malformed or does not match the ambient data."""
