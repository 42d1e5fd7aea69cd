"""Rotation, reflection and translation automorphisms of ``G_k``."""

from __future__ import annotations

import enum
from typing import Callable, Iterable, Sequence

from .gaussian import DenseModulus, GInt, canonical_mod

__all__ = [
    "Atom",
    "SymmetryWord",
    "rho",
    "sigma",
    "apply",
    "parse_word",
    "as_map",
    "translate",
]


class Atom(enum.Enum):
    RHO = "ρ"
    SIGMA = "σ"


SymmetryWord = tuple[Atom, ...]


def _maybe_reduce(v: GInt, modulus: DenseModulus | int | None) -> GInt:
    return v if modulus is None else canonical_mod(v, modulus)


def rho(v: GInt, modulus: DenseModulus | int | None = None) -> GInt:
    """Quarter turn counterclockwise: ``a+bi -> -b+ai``."""
    return _maybe_reduce(GInt(-v.im, v.re), modulus)


def sigma(v: GInt, modulus: DenseModulus | int | None = None) -> GInt:
    """Reflection in the line ``im = -re``: ``a+bi -> -b-ai``."""
    return _maybe_reduce(GInt(-v.im, -v.re), modulus)


_ATOM_MAPS = {Atom.RHO: rho, Atom.SIGMA: sigma}
_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")


def parse_word(text: str) -> SymmetryWord:
    """Parse words like ``"ρ³σ"`` or ``"r3s"`` into a tuple of atoms.

    The empty string is the identity.
    """
    text = text.translate(_SUPERSCRIPTS).replace(" ", "").replace("^", "")
    atoms: list[Atom] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "ρr":
            atom = Atom.RHO
        elif ch in "σs":
            atom = Atom.SIGMA
        else:
            raise ValueError(f"unknown symmetry atom {ch!r} in {text!r}")
        i += 1
        j = i
        while j < len(text) and text[j].isdigit():
            j += 1
        atoms.extend([atom] * (int(text[i:j]) if j > i else 1))
        i = j
    return tuple(atoms)


def apply(
    word: SymmetryWord | str | Sequence[Atom],
    v: GInt,
    modulus: DenseModulus | int | None = None,
) -> GInt:
    """Apply ``word`` to ``v``, rightmost atom first."""
    if isinstance(word, str):
        word = parse_word(word)
    for atom in reversed(tuple(word)):
        v = _ATOM_MAPS[atom](v, modulus)
    return v


def as_map(
    word: SymmetryWord | str | Iterable[Atom], modulus: DenseModulus | int | None = None
) -> Callable[[GInt], GInt]:
    word = parse_word(word) if isinstance(word, str) else tuple(word)
    return lambda v: apply(word, v, modulus)


def translate(v: GInt, t: GInt, m: DenseModulus | int) -> GInt:
    """Shift ``v`` by ``t`` modulo ``alpha_k``; sends 0 to ``t``."""
    return canonical_mod(v + t, m)
