"""Exception hierarchy shared across the engine."""


class MigrationError(Exception):
    """Base class for all engine errors."""


class SchemaError(MigrationError):
    """A document does not conform to its file schema."""


class ValidationError(MigrationError):
    """A structurally well-formed value violates an invariant."""


class ResolutionError(MigrationError):
    """A program references a callee unknown to the corpus."""


class ScopeError(MigrationError):
    """A program references a variable before it is bound."""


class ConsistencyError(MigrationError):
    """Inputs built from different corpora were mixed."""


class AdapterError(MigrationError):
    """The external runtime adapter failed outside candidate evaluation."""


class SourceTestFailure(MigrationError):
    """The input program does not pass its own test suite."""
