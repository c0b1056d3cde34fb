"""
Term Models

Named, de Bruijn and co-de Bruijn lambda terms, open terms, and substitutions.

Co-de Bruijn nodes are immutable and cache their support size, node count and
hash, so structural equality and dictionary keys stay cheap on shared subterms.
"""

from dataclasses import dataclass, field
from typing import Tuple, Union

from packed_thinnings.bits import full, popcount
from packed_thinnings.config import RUNTIME
from packed_thinnings.errors import InvariantViolation, ScopeMismatchError
from packed_thinnings.thin import Thinning

# Named syntax


@dataclass(frozen=True, slots=True)
class VarN:
    name: str


@dataclass(frozen=True, slots=True)
class AppN:
    fun: "NamedTerm"
    arg: "NamedTerm"


@dataclass(frozen=True, slots=True)
class LamN:
    binder: str
    body: "NamedTerm"


NamedTerm = Union[VarN, AppN, LamN]

# De Bruijn syntax


@dataclass(frozen=True, slots=True)
class VarD:
    index: int


@dataclass(frozen=True, slots=True)
class AppD:
    fun: "DBTerm"
    arg: "DBTerm"


@dataclass(frozen=True, slots=True)
class LamD:
    body: "DBTerm"


DBTerm = Union[VarD, AppD, LamD]

# Co-de Bruijn syntax


@dataclass(frozen=True, eq=False, slots=True)
class VarC:
    """A variable. Its support is exactly the one variable it refers to."""

    support_size: int = field(default=1, init=False)
    size: int = field(default=1, init=False)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VarC)

    def __hash__(self) -> int:
        return 0x5A17

    def __str__(self) -> str:
        return "(var)"


@dataclass(frozen=True, eq=False, slots=True)
class AppC:
    """An application; each child carries a thinning into the node's support.

    The two thinnings share the node's support as big end and together keep
    every variable of it.
    """

    left_thin: Thinning
    left: "CBTerm"
    right_thin: Thinning
    right: "CBTerm"
    support_size: int = field(init=False)
    size: int = field(init=False)
    hash_value: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "support_size", self.left_thin.big_end)
        object.__setattr__(self, "size", 1 + self.left.size + self.right.size)
        object.__setattr__(
            self,
            "hash_value",
            hash(("app", self.left_thin, self.left, self.right_thin, self.right)),
        )
        if RUNTIME.debug_checks:
            check_app(self)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AppC) and same_term(self, other)

    def __hash__(self) -> int:
        return self.hash_value

    def __str__(self) -> str:
        from packed_thinnings.terms.printing import show_codebruijn

        return show_codebruijn(self)


@dataclass(frozen=True, eq=False, slots=True)
class LamC:
    """An abstraction. `used` says whether the body mentions the binder,
    in which case the binder is bit 0 of the body's support."""

    used: bool
    body: "CBTerm"
    support_size: int = field(init=False)
    size: int = field(init=False)
    hash_value: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "support_size", self.body.support_size - (1 if self.used else 0))
        object.__setattr__(self, "size", 1 + self.body.size)
        object.__setattr__(self, "hash_value", hash(("lam", self.used, self.body)))
        if RUNTIME.debug_checks and self.support_size < 0:
            raise InvariantViolation("Used binder needs a non-empty body support")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LamC) and same_term(self, other)

    def __hash__(self) -> int:
        return self.hash_value

    def __str__(self) -> str:
        from packed_thinnings.terms.printing import show_codebruijn

        return show_codebruijn(self)


CBTerm = Union[VarC, AppC, LamC]

VAR = VarC()


def same_term(a: CBTerm, b: CBTerm) -> bool:
    """Structural equality, walked with an explicit stack.

    Shared subterms compare by identity; differing cached hashes end the walk.
    """
    pending = [(a, b)]
    while pending:
        x, y = pending.pop()
        if x is y:
            continue
        if isinstance(x, VarC) or isinstance(y, VarC):
            if not (isinstance(x, VarC) and isinstance(y, VarC)):
                return False
        elif isinstance(x, AppC):
            if not (
                isinstance(y, AppC)
                and x.hash_value == y.hash_value
                and x.left_thin == y.left_thin
                and x.right_thin == y.right_thin
            ):
                return False
            pending.append((x.right, y.right))
            pending.append((x.left, y.left))
        elif isinstance(x, LamC):
            if not (isinstance(y, LamC) and x.hash_value == y.hash_value and x.used == y.used):
                return False
            pending.append((x.body, y.body))
        else:
            return False
    return True


def check_app(node: AppC) -> None:
    """Check the local invariants of an application node.

    Raises:
        InvariantViolation: On width, support or relevance violations
    """
    lt, rt = node.left_thin, node.right_thin
    if lt.big_end != rt.big_end:
        raise InvariantViolation(
            "Application children disagree on support width",
            {"left": lt.big_end, "right": rt.big_end},
        )
    if popcount(lt.encoding) != node.left.support_size:
        raise InvariantViolation(
            "Left thinning does not select the left child's support",
            {"kept": popcount(lt.encoding), "support": node.left.support_size},
        )
    if popcount(rt.encoding) != node.right.support_size:
        raise InvariantViolation(
            "Right thinning does not select the right child's support",
            {"kept": popcount(rt.encoding), "support": node.right.support_size},
        )
    if lt.encoding | rt.encoding != full(lt.big_end):
        raise InvariantViolation(
            "Application support has a variable neither child uses",
            {"left": str(lt), "right": str(rt)},
        )


@dataclass(frozen=True, slots=True)
class OpenTerm:
    """A co-de Bruijn term together with the embedding of its support
    into an ambient scope of size thinning.big_end."""

    thinning: Thinning
    term: CBTerm

    def __post_init__(self) -> None:
        if RUNTIME.debug_checks and popcount(self.thinning.encoding) != self.term.support_size:
            raise InvariantViolation(
                "Outer thinning does not select the term's support",
                {"kept": popcount(self.thinning.encoding), "support": self.term.support_size},
            )

    @property
    def width(self) -> int:
        """Size of the ambient scope."""
        return self.thinning.big_end

    def __str__(self) -> str:
        from packed_thinnings.terms.printing import show_open

        return show_open(self)


# Substitutions


@dataclass(frozen=True, slots=True)
class Rename:
    """Send a variable to target variable `to` (an index from the local end)."""

    to: int


@dataclass(frozen=True, slots=True)
class Replace:
    """Send a variable to a term over the target scope."""

    term: OpenTerm


SubstEntry = Union[Rename, Replace]


@dataclass(frozen=True, slots=True)
class Subst:
    """A simultaneous substitution from an ambient scope into a target scope.

    `entries[i]` says what becomes of ambient variable i (local end first).
    """

    target_size: int
    entries: Tuple[SubstEntry, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.entries, tuple):
            object.__setattr__(self, "entries", tuple(self.entries))
        for i, entry in enumerate(self.entries):
            if isinstance(entry, Rename):
                if not 0 <= entry.to < self.target_size:
                    raise ScopeMismatchError(
                        f"Rename target of entry {i} out of range",
                        entry.to,
                        self.target_size,
                    )
            elif entry.term.width != self.target_size:
                raise ScopeMismatchError(
                    f"Replacement term of entry {i} lives in the wrong scope",
                    entry.term.width,
                    self.target_size,
                )

    @property
    def source_size(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int) -> "Subst":
        """Every variable renamed to itself."""
        return cls(n, tuple(Rename(i) for i in range(n)))

    def weaken(self) -> "Subst":
        """The substitution to push under one more binder."""
        from packed_thinnings.terms.ops import weaken_subst

        return weaken_subst(self)
