"""Shared value types and exceptions.

Everything in this package is parameterised by a dimension pair (n, m):
the underlying group is R^(2n) x R^m, where 2n is the dimension of the
horizontal layer and m the dimension of the centre.  The homogeneous
dimension is Q = 2n + 2m.
"""

from __future__ import annotations

from dataclasses import dataclass


class PrecisionUnreachable(RuntimeError):
    """A certified error target could not be met within the iteration cap.

    Carries the best bound that *was* achieved so callers can decide
    whether to accept it.
    """

    def __init__(self, message: str, best_bound: float, terms_used: int):
        super().__init__(message)
        self.best_bound = best_bound
        self.terms_used = terms_used


class InadmissiblePair(ValueError):
    """No H-type group exists for this (n, m); carries rho(2n)."""

    def __init__(self, pair: "DimPair", rho_2n: int):
        super().__init__(
            f"no H-type group with (n, m) = ({pair.n}, {pair.m}): "
            f"rho(2n) = rho({2 * pair.n}) = {rho_2n} allows at most m = {rho_2n - 1}"
        )
        self.pair = pair
        self.rho_2n = rho_2n


@dataclass(frozen=True, order=True)
class DimPair:
    """Dimension parameters of an H-type group R^(2n) x R^m.

    n: half the dimension of the horizontal layer (which is always even).
    m: dimension of the centre.
    """

    n: int
    m: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.m, int)):
            raise TypeError(f"n, m must be ints, got ({self.n!r}, {self.m!r})")
        if self.n < 1 or self.m < 1:
            raise ValueError(f"need n >= 1 and m >= 1, got ({self.n}, {self.m})")

    @property
    def homogeneous_dimension(self) -> int:
        return 2 * (self.n + self.m)

    def __str__(self) -> str:
        return f"({self.n},{self.m})"


PairLike = "DimPair | tuple[int, int]"


def as_pair(pair) -> DimPair:
    """Coerce a DimPair or (n, m) tuple to DimPair."""
    if isinstance(pair, DimPair):
        return pair
    n, m = pair
    return DimPair(int(n), int(m))
