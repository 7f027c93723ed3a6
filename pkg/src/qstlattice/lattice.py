"""Finite-window complex functions on the integer lattice."""

from __future__ import annotations

import operator
from collections.abc import Callable, Iterator
from dataclasses import dataclass

from .errors import DomainError, ValidationError


@dataclass(frozen=True)
class LatticeFunction:
    """Complex samples on the contiguous index window [origin, origin + len - 1].

    Evaluation outside the window raises DomainError; windows are never
    padded, so operator outputs shrink exactly as their stencils require.
    """

    origin: int
    values: tuple[complex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "origin", operator.index(self.origin))
        values = tuple(complex(v) for v in self.values)
        if not values:
            raise ValidationError("LatticeFunction window must be nonempty")
        object.__setattr__(self, "values", values)

    @classmethod
    def tabulate(cls, fn: Callable[[int], complex], j_lo: int, j_hi: int) -> "LatticeFunction":
        """Sample fn(j) over the inclusive window [j_lo, j_hi]."""
        if j_hi < j_lo:
            raise ValidationError(f"empty window [{j_lo}, {j_hi}]")
        return cls(j_lo, tuple(complex(fn(j)) for j in range(j_lo, j_hi + 1)))

    @classmethod
    def delta(cls, j0: int, j_lo: int, j_hi: int) -> "LatticeFunction":
        """Kronecker delta at j0 on the window [j_lo, j_hi]."""
        return cls.tabulate(lambda j: 1.0 + 0j if j == j0 else 0j, j_lo, j_hi)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def last_index(self) -> int:
        return self.origin + len(self.values) - 1

    def indices(self) -> range:
        return range(self.origin, self.origin + len(self.values))

    def value_at(self, j: int) -> complex:
        if not (self.origin <= j <= self.last_index):
            raise DomainError(f"index {j} is outside the window [{self.origin}, {self.last_index}]")
        return self.values[j - self.origin]

    def items(self) -> Iterator[tuple[int, complex]]:
        return zip(self.indices(), self.values)

    def max_abs(self) -> float:
        return max(abs(v) for v in self.values)

    def scaled(self, factor: complex) -> "LatticeFunction":
        return LatticeFunction(self.origin, tuple(factor * v for v in self.values))


def subtract(f: LatticeFunction, g: LatticeFunction) -> LatticeFunction:
    """Componentwise f - g; the windows must coincide."""
    if f.origin != g.origin or len(f) != len(g):
        raise DomainError(
            f"window mismatch: [{f.origin}, {f.last_index}] vs [{g.origin}, {g.last_index}]"
        )
    return LatticeFunction(f.origin, tuple(a - b for a, b in zip(f.values, g.values)))
