"""Totally ordered phase values: a rational or +inf, refined by an integer tag."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple, Union

from ..core.exceptions import ParseError

Rational = Union[int, Fraction]


@dataclass(frozen=True, order=False)
class PhaseValue:
    """A phase ordered by ``(value, tag)``; ``value=None`` stands for +inf.

    The tag splits one rational into several ordered phases, e.g. ``1 < 1*``
    is ``PhaseValue(1, 0) < PhaseValue(1, 1)``.
    """

    value: Optional[Fraction] = None
    tag: int = 0
    _key: Tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.value is not None:
            object.__setattr__(self, "value", Fraction(self.value))
        object.__setattr__(self, "tag", int(self.tag))
        infinite = self.value is None
        object.__setattr__(self, "_key", (infinite, Fraction(0) if infinite else self.value,
                                          self.tag))

    @classmethod
    def infinity(cls, tag: int = 0) -> "PhaseValue":
        return cls(None, tag)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __lt__(self, other: "PhaseValue") -> bool:
        return self._key < other._key

    def __le__(self, other: "PhaseValue") -> bool:
        return self._key <= other._key

    def __gt__(self, other: "PhaseValue") -> bool:
        return self._key > other._key

    def __ge__(self, other: "PhaseValue") -> bool:
        return self._key >= other._key

    def __str__(self) -> str:
        base = "inf" if self.value is None else format_rational(self.value)
        return base if self.tag == 0 else f"{base}*{self.tag}"


def format_rational(value: Rational) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"Not a rational number: {text!r}")


def parse_phase(text: str) -> PhaseValue:
    """Parse ``3/4``, ``inf``, ``1*`` or ``1*1`` (value, then an optional tag)."""
    text = text.strip()
    base, star, tag = text.partition("*")
    if star:
        try:
            tag_value = int(tag) if tag.strip() else 1
        except ValueError:
            raise ParseError(f"Bad phase tag in {text!r}")
    else:
        tag_value = 0
    if base.strip().lower() in ("inf", "+inf"):
        return PhaseValue.infinity(tag_value)
    return PhaseValue(parse_rational(base), tag_value)
