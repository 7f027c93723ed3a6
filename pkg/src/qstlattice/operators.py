"""Difference, shift, position, and momentum operators on lattice windows.

All stencils are forward: the first difference at j reads (j, j+1) and the
second difference reads (j, j+1, j+2), so each application trims the window
on the right by (stencil width - 1).  Momentum is (-i hbar / lam) times the
first difference; position multiplies by j * lam pointwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .lattice import LatticeFunction
from .params import QstParams

_STENCIL_WIDTHS = {
    "forward_difference": 2,
    "second_difference": 3,
    "shift": 2,
    "position_multiply": 1,
    "momentum": 2,
}


def _require_window(f: LatticeFunction, needed: int, op: str) -> None:
    if len(f) < needed:
        raise DomainError(f"{op} needs a window of length >= {needed}, got {len(f)}")


def forward_difference(f: LatticeFunction) -> LatticeFunction:
    """g(j) = f(j+1) - f(j); the window shrinks by one on the right."""
    _require_window(f, 2, "forward_difference")
    v = f.values
    return LatticeFunction(f.origin, tuple(v[i + 1] - v[i] for i in range(len(v) - 1)))


def second_difference(f: LatticeFunction) -> LatticeFunction:
    """g(j) = f(j+2) - 2 f(j+1) + f(j); the window shrinks by two."""
    _require_window(f, 3, "second_difference")
    v = f.values
    return LatticeFunction(f.origin, tuple(v[i + 2] - 2.0 * v[i + 1] + v[i] for i in range(len(v) - 2)))


def shift(f: LatticeFunction) -> LatticeFunction:
    """g(j) = f(j+1); the window shrinks by one on the right."""
    _require_window(f, 2, "shift")
    return LatticeFunction(f.origin, f.values[1:])


def _position(f: LatticeFunction, lam: float) -> LatticeFunction:
    return LatticeFunction(f.origin, tuple((j * lam) * v for j, v in f.items()))


def _momentum(f: LatticeFunction, hbar: float, lam: float) -> LatticeFunction:
    prefactor = -1j * hbar / lam
    df = forward_difference(f)
    return df.scaled(prefactor)


def position_apply(params: QstParams, f: LatticeFunction) -> LatticeFunction:
    """g(j) = (j * lam) * f(j); the window is unchanged."""
    return _position(f, params.lam)


def momentum_apply(params: QstParams, f: LatticeFunction) -> LatticeFunction:
    """g = (-i hbar / lam) * forward_difference(f)."""
    return _momentum(f, params.constants.hbar, params.lam)


@dataclass(frozen=True)
class LatticeOperator:
    """Declarative operator: a kind plus the scales it multiplies or divides by.

    Composed operators apply right to left, matching operator-product order.
    The scale field carries lam for position and momentum; hbar matters for
    momentum only.
    """

    kind: str
    scale: float = 1.0
    hbar: float = 1.0
    parts: tuple["LatticeOperator", ...] = ()

    @property
    def stencil_width(self) -> int:
        if self.kind == "composed":
            return 1 + sum(p.stencil_width - 1 for p in self.parts)
        return _STENCIL_WIDTHS[self.kind]

    def apply(self, f: LatticeFunction) -> LatticeFunction:
        if self.kind == "composed":
            for op in reversed(self.parts):
                f = op.apply(f)
            return f
        if self.kind == "forward_difference":
            return forward_difference(f)
        if self.kind == "second_difference":
            return second_difference(f)
        if self.kind == "shift":
            return shift(f)
        if self.kind == "position_multiply":
            return _position(f, self.scale)
        if self.kind == "momentum":
            return _momentum(f, self.hbar, self.scale)
        raise ValueError(f"unknown operator kind {self.kind!r}")


def diff_op() -> LatticeOperator:
    return LatticeOperator("forward_difference")


def second_diff_op() -> LatticeOperator:
    return LatticeOperator("second_difference")


def shift_op() -> LatticeOperator:
    return LatticeOperator("shift")


def position_op(params: QstParams) -> LatticeOperator:
    return LatticeOperator("position_multiply", scale=params.lam)


def momentum_op(params: QstParams) -> LatticeOperator:
    return LatticeOperator("momentum", scale=params.lam, hbar=params.constants.hbar)


def compose(*ops: LatticeOperator) -> LatticeOperator:
    """Operator product; compose(p, x) applies x first, then p."""
    return LatticeOperator("composed", parts=tuple(ops))
