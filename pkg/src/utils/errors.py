"""Exception hierarchy for the compute modules."""


class GammaForgeError(ValueError):
    """Base class for every domain error raised by gammaforge."""


class CompositionError(GammaForgeError):
    """Two morphisms (or Γ-set maps) whose objects do not match."""


class PartitionError(GammaForgeError):
    """A block list that is not a partition of {1..n}."""


class GammaSetValidationError(GammaForgeError):
    def __init__(self, message: str, morphism: str | None = None):
        super().__init__(message)
        self.morphism = morphism


class TruncationError(GammaForgeError):
    """A request needs a level above the Γ-set's max_level."""


class GuardExceededError(GammaForgeError):
    def __init__(self, what: str, size: int, guard: int):
        super().__init__(f"{what}: {size} candidatos excedem o limite de enumeracao {guard}")
        self.size = size
        self.guard = guard


class NonAdditiveMapError(GammaForgeError):
    def __init__(self, message: str, triple: tuple[str, str, str] | None = None):
        super().__init__(message)
        self.triple = triple


class InternalConsistencyError(GammaForgeError):
    """A tripwire that valid inputs should never reach."""


class UnsupportedError(GammaForgeError):
    """The requested computation is outside the supported desk scale."""


class CodecError(GammaForgeError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (linha {line}, coluna {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class UnknownNameError(GammaForgeError):
    """A catalog name (monoid, semiring, table) that does not exist."""


class DescriptorError(GammaForgeError):
    """Command-line parameters that do not describe a valid construction."""
