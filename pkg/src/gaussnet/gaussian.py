"""Exact Gaussian-integer arithmetic and residues modulo ``k + (k+1)i``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = ["GInt", "DenseModulus", "norm", "canonical_mod", "diamond"]


@dataclass(frozen=True, order=True, slots=True)
class GInt:
    """A Gaussian integer ``re + im*i`` with exact integer parts.

    Ordering is the plain ``(re, im)`` tuple order; it exists only so that
    containers of nodes sort deterministically.
    """

    re: int
    im: int

    def __post_init__(self) -> None:
        if type(self.re) is not int or type(self.im) is not int:
            raise TypeError(f"GInt parts must be int, got {self.re!r}, {self.im!r}")

    @classmethod
    def coerce(cls, value: GInt | int | tuple[int, int]) -> GInt:
        if isinstance(value, GInt):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        re, im = value
        return cls(int(re), int(im))

    def __add__(self, other: GInt | int) -> GInt:
        other = GInt.coerce(other)
        return GInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: GInt | int) -> GInt:
        other = GInt.coerce(other)
        return GInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: GInt | int) -> GInt:
        return GInt.coerce(other) - self

    def __mul__(self, other: GInt | int) -> GInt:
        other = GInt.coerce(other)
        return GInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self) -> GInt:
        return GInt(-self.re, -self.im)

    def conjugate(self) -> GInt:
        return GInt(self.re, -self.im)

    @property
    def lee_weight(self) -> int:
        """``|re| + |im|``: the hop count on the infinite grid."""
        return abs(self.re) + abs(self.im)

    def astuple(self) -> tuple[int, int]:
        return (self.re, self.im)

    def __repr__(self) -> str:
        return f"GInt({self.re}, {self.im})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        unit = {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        if self.re == 0:
            return unit
        sign = "+" if self.im > 0 else ""
        return f"{self.re}{sign}{unit}"


I = GInt(0, 1)


def norm(g: GInt) -> int:
    """Return ``re**2 + im**2``."""
    return g.re * g.re + g.im * g.im


@dataclass(frozen=True, slots=True)
class DenseModulus:
    """The modulus ``alpha_k = k + (k+1)i`` of the dense network of diameter ``k``."""

    k: int

    def __post_init__(self) -> None:
        if type(self.k) is not int or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")

    @property
    def alpha(self) -> GInt:
        return GInt(self.k, self.k + 1)

    @property
    def n(self) -> int:
        return 2 * self.k * self.k + 2 * self.k + 1


def _round_div(num: int, den: int) -> int:
    # nearest integer to num/den (den > 0), ties toward zero
    q, r = divmod(num, den)
    if 2 * r > den or (2 * r == den and q < 0):
        q += 1
    return q


_OFFSETS = tuple(GInt(a, b) for a in (0, 1, -1) for b in (0, 1, -1))


def canonical_mod(g: GInt, m: DenseModulus | int) -> GInt:
    """Reduce ``g`` to its representative inside the diamond ``|re|+|im| <= k``.

    The quotient is first estimated by rounding ``g * conj(alpha) / norm(alpha)``
    with integer arithmetic, then corrected over the nine neighbouring
    lattice quotients.
    """
    if not isinstance(m, DenseModulus):
        m = DenseModulus(m)
    return _reduce(g.re, g.im, m.k)


@lru_cache(maxsize=1 << 16)
def _reduce(re: int, im: int, k: int) -> GInt:
    ar, ai = k, k + 1
    n = ar * ar + ai * ai
    q = GInt(_round_div(re * ar + im * ai, n), _round_div(im * ar - re * ai, n))
    alpha = GInt(ar, ai)
    g = GInt(re, im)
    for off in _OFFSETS:
        r = g - (q + off) * alpha
        if r.lee_weight <= k:
            return r
    raise ArithmeticError(f"no diamond representative found for {g} mod {alpha}")


def diamond(k: int) -> list[GInt]:
    """All ``a+bi`` with ``|a|+|b| <= k``, rows top to bottom, left to right."""
    return [
        GInt(a, b)
        for b in range(k, -k - 1, -1)
        for a in range(-(k - abs(b)), k - abs(b) + 1)
    ]
