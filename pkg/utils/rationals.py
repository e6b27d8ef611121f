"""
Razionali esatti: alias e forma testuale "p/q"
"""
from __future__ import annotations

from fractions import Fraction

Q = Fraction  # alias del tipo razionale


def to_q(value: int | str | Fraction) -> Q:
    """
    Converte in razionale esatto

    I float non sono ammessi: ogni coordinata deve restare esatta.
    """
    if isinstance(value, float):
        raise TypeError("Coordinate float non ammesse, usa int, 'p/q' o Fraction")
    return Fraction(value)


def format_rational(q: Fraction) -> str:
    """Forma "p/q" (gli interi restano "p")"""
    return str(q)


def parse_rational(text: str) -> Q:
    """Inversa di format_rational"""
    return Fraction(text.strip())


def midpoint(a: Fraction, b: Fraction) -> Q:
    return (a + b) / 2
