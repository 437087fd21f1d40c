"""Movement rules and traversal goals shared by the solver, oracle and walk validation."""

import enum

from .products import ProductKind


class MoveRules(enum.Enum):
    """How the two players may move in one time step.

    ``TRADITIONAL``: each player independently moves to a neighbor or stays.
    ``ACTIVE``: both players move. ``LAZY``: exactly one player moves.
    """

    TRADITIONAL = "traditional"
    ACTIVE = "active"
    LAZY = "lazy"

    @property
    def product(self) -> ProductKind:
        return _PRODUCT[self]


class Goal(enum.Enum):
    VERTEX = "vertex"
    EDGE = "edge"


_PRODUCT = {
    MoveRules.TRADITIONAL: ProductKind.STRONG,
    MoveRules.ACTIVE: ProductKind.DIRECT,
    MoveRules.LAZY: ProductKind.CARTESIAN,
}

RULES_FOR_PRODUCT = {v: k for k, v in _PRODUCT.items()}

# Fixed reporting order for the six span variants.
VARIANTS = tuple((r, g) for r in MoveRules for g in Goal)
