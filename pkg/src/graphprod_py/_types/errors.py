class GraphProductError(Exception):
    code = "ERROR"


class InvariantViolationError(GraphProductError):
    code = "INVARIANT_VIOLATION"


class ParseError(GraphProductError):
    """Malformed input text.

    Args:
        message: What went wrong.
        path: The file being read, if any.
        line: 1-based line number, if known.
        token: The offending token, if known.
    """

    code = "PARSE_ERROR"

    def __init__(
        self,
        message: str,
        path: str | None = None,
        line: int | None = None,
        token: str | None = None,
    ) -> None:
        self.message = message
        self.path = path
        self.line = line
        self.token = token
        super().__init__(str(self))

    def __str__(self) -> str:
        where = self.path or "<input>"
        if self.line is not None:
            where = f"{where}:{self.line}"
        if self.token is not None:
            return f"{where}: {self.message} (token {self.token!r})"
        return f"{where}: {self.message}"


class DuplicateVertexError(ParseError):
    code = "DUPLICATE_VERTEX"


class DuplicateEdgeError(ParseError):
    code = "DUPLICATE_EDGE"


class InvalidOrderError(ParseError):
    code = "INVALID_ORDER"


class InvalidWordError(ParseError):
    code = "INVALID_WORD"


class InvalidCharacterError(ParseError):
    code = "INVALID_CHARACTER"


class PreconditionError(GraphProductError):
    code = "PRECONDITION"


class EmptyGraphError(PreconditionError):
    code = "EMPTY_GRAPH"


class UnknownVertexError(PreconditionError):
    code = "UNKNOWN_VERTEX"


class EmptyComplexError(PreconditionError):
    code = "EMPTY_COMPLEX"


class ZeroCharacterError(PreconditionError):
    code = "ZERO_CHARACTER"


class NotFullInputError(PreconditionError):
    code = "NOT_FULL_INPUT"


class NotNormalInputError(PreconditionError):
    code = "NOT_NORMAL_INPUT"


class ContextMismatchError(PreconditionError):
    code = "CONTEXT_MISMATCH"


class DimensionMismatchError(PreconditionError):
    code = "DIMENSION_MISMATCH"


class InvalidGraphError(PreconditionError):
    code = "INVALID_GRAPH"
