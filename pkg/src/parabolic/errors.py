"""Exception hierarchy shared by every module of the package."""


class ParabolicError(Exception):
    """Base class for all package errors."""


# algebra
class NotHomogeneousError(ParabolicError, ValueError):
    pass


class RootFindingError(ParabolicError, ArithmeticError):
    """Simultaneous iteration did not settle (ill-conditioned input)."""


class IllConditionedError(ParabolicError, ArithmeticError):
    pass


class ContourEvaluationError(ParabolicError, ArithmeticError):
    pass


# germ
class GermError(ParabolicError, ValueError):
    """Input does not describe a germ tangent to the identity."""


class NotFixingOrigin(GermError):
    pass


class NotTangentToIdentity(GermError):
    pass


class IsIdentity(GermError):
    pass


# directions / indices
class DirectionNotCharacteristic(ParabolicError, ValueError):
    pass


class Dicritical(ParabolicError, ValueError):
    pass


class DegenerateDirection(ParabolicError, ValueError):
    pass


class WrongClass(ParabolicError, ValueError):
    pass


# dynamics
class TransformDomainError(ParabolicError, ValueError):
    """Point on a coordinate axis or outside the branch sector."""


class HypothesisCheckError(ParabolicError, ValueError):
    """Declared normal-form error bounds do not hold on the sampled patch."""


class FatouConvergenceError(ParabolicError, ArithmeticError):
    pass


class NotInBasinError(ParabolicError, ValueError):
    pass


class LiftUndefinedError(ParabolicError, ValueError):
    pass
