"""Exact half-integer arithmetic.

Every numeric quantity in this library is an integer or a half-integer.
``HalfInt`` stores twice the value as a plain ``int``, so addition,
subtraction and comparison are exact; no floats appear anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import InputError

HalfIntLike = Union["HalfInt", int]


@dataclass(frozen=True)
class HalfInt:
    """An integer or half-integer, stored as its doubled value.

    >>> HalfInt(7)
    HalfInt(7/2)
    >>> HalfInt.of(3) + HalfInt(1)
    HalfInt(7/2)
    >>> HalfInt.of(3) - 1
    HalfInt(2)
    """

    twice: int

    @classmethod
    def of(cls, value: HalfIntLike) -> "HalfInt":
        """Coerce an int (or HalfInt) to a HalfInt."""
        if isinstance(value, HalfInt):
            return value
        return cls(2 * value)

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        """Parse "7" or "7/2" (optionally negative)."""
        text = text.strip()
        try:
            if text.endswith("/2"):
                return cls(int(text[:-2]))
            return cls(2 * int(text))
        except ValueError:
            raise InputError(f"not a half-integer: {text!r}") from None

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __int__(self) -> int:
        if not self.is_integer:
            raise InputError(f"{self} is not an integer")
        return self.twice // 2

    def __add__(self, other: HalfIntLike) -> "HalfInt":
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other: HalfIntLike) -> "HalfInt":
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other: HalfIntLike) -> "HalfInt":
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = HalfInt.of(other)
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("HalfInt", self.twice))

    def _cmp_key(self, other: HalfIntLike) -> int:
        return HalfInt.of(other).twice

    def __lt__(self, other: HalfIntLike) -> bool:
        return self.twice < self._cmp_key(other)

    def __le__(self, other: HalfIntLike) -> bool:
        return self.twice <= self._cmp_key(other)

    def __gt__(self, other: HalfIntLike) -> bool:
        return self.twice > self._cmp_key(other)

    def __ge__(self, other: HalfIntLike) -> bool:
        return self.twice >= self._cmp_key(other)

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"
