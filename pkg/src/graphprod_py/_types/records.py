"""Verdicts, budgets and other small records shared across the package."""

import enum
from dataclasses import asdict, dataclass


class Answer(enum.Enum):
    """Three-valued answer; YES and NO are always certified."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, value: bool) -> "Answer":
        return cls.YES if value else cls.NO


class Fullness(enum.Enum):
    FULL = "FULL"
    NOT_FULL = "NOT_FULL"
    UNKNOWN = "UNKNOWN"


class Normality(enum.Enum):
    ASSERTED = "ASSERTED"
    VERIFIED = "VERIFIED"
    FAILED = "FAILED"
    UNKNOWN = "UNKNOWN"


class Membership(enum.Enum):
    IN = "IN"
    NOT_IN = "NOT_IN"
    UNKNOWN = "UNKNOWN"


class Centrality(enum.Enum):
    CENTRAL_MOD_N = "CENTRAL_MOD_N"
    NOT = "NOT"
    UNKNOWN = "UNKNOWN"


@dataclass(slots=True, frozen=True)
class SearchBudget:
    """Limits for the breadth-first search behind membership certificates."""

    depth: int = 8
    """Maximum number of generator letters in a certificate."""
    slack: int = 4
    """States longer than the target by more than this many syllables are pruned."""
    max_states: int = 1_000_000
    """Total states visited before giving up."""

    def to_dict(self) -> dict[str, int]:
        return asdict(self)


@dataclass(slots=True, frozen=True)
class FullnessBudget:
    """Search limits for certificates that N meets a central factor."""

    extra_length: int = 0
    """Products of up to ``1 + extra_length`` generators are tried."""

    def to_dict(self) -> dict[str, int]:
        return asdict(self)


@dataclass(slots=True, frozen=True)
class TietzeBudget:
    """Limits for simplifying a fundamental-group presentation."""

    steps: int = 1000
    max_relator_length: int = 10_000

    def to_dict(self) -> dict[str, int]:
        return asdict(self)
