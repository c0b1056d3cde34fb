"""Thinning data model: the packed record, its view, and scopes."""

from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple, Union

from packed_thinnings.bits import popcount, render_bits
from packed_thinnings.config import RUNTIME
from packed_thinnings.errors import InvariantViolation


@dataclass(frozen=True, slots=True)
class Thinning:
    """An order-preserving embedding of a small scope into a big one.

    `big_end` is the size of the target scope. Bit i of `encoding` says
    whether the target variable i positions from the local end is kept.
    Only the `big_end` least significant bits may be set.

    Equality is field equality: two thinnings are the same embedding exactly
    when both numbers agree.
    """

    big_end: int
    encoding: int

    def __post_init__(self) -> None:
        if RUNTIME.debug_checks and (
            self.big_end < 0 or self.encoding < 0 or self.encoding >> self.big_end
        ):
            raise InvariantViolation(
                f"Encoding {self.encoding} does not fit in big end {self.big_end}",
                {"big_end": self.big_end, "encoding": self.encoding},
            )

    @property
    def small_end(self) -> int:
        """Size of the source scope."""
        return popcount(self.encoding)

    def __str__(self) -> str:
        return render_bits(self.big_end, self.encoding)


@dataclass(frozen=True, slots=True)
class Done:
    """The empty thinning."""

    def __str__(self) -> str:
        return "Done"


@dataclass(frozen=True, slots=True)
class Keep:
    """The most local variable is kept."""

    tail: Thinning

    def __str__(self) -> str:
        return f"Keep {self.tail}"


@dataclass(frozen=True, slots=True)
class Drop:
    """The most local variable is discarded."""

    tail: Thinning

    def __str__(self) -> str:
        return f"Drop {self.tail}"


ThinView = Union[Done, Keep, Drop]

DONE = Done()


@dataclass(frozen=True, slots=True)
class Scope:
    """An ordered context of names, outermost first.

    The last name is the most local variable and corresponds to bit 0.
    Names may repeat; the more local occurrence shadows.
    """

    names: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.names, tuple):
            object.__setattr__(self, "names", tuple(self.names))

    @classmethod
    def of(cls, names: Iterable[str]) -> "Scope":
        return cls(tuple(names))

    @classmethod
    def parse(cls, text: str) -> "Scope":
        """Parse a comma-separated, outermost-first list such as "x,y,z"."""
        return cls(tuple(name.strip() for name in text.split(",") if name.strip()))

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def local(self, i: int) -> str:
        """The name i positions from the local end."""
        return self.names[len(self.names) - 1 - i]

    def extend(self, name: str) -> "Scope":
        """Snoc a new most-local name."""
        return Scope(self.names + (name,))

    def init(self) -> "Scope":
        """Everything but the most local name."""
        return Scope(self.names[:-1])

    def __str__(self) -> str:
        return "[" + ", ".join(self.names) + "]"
