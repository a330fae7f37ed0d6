"""Exact coefficient rings: the integers, the rationals and prime fields.

Elements are plain Python values so that arithmetic stays cheap:

* ``Z``  -- ``int``
* ``Q``  -- ``fractions.Fraction`` (always in lowest terms, positive denominator)
* ``Fp`` -- ``int`` in ``[0, p)``

All operations on elements go through :class:`RingSpec`, which knows how to
bring a raw Python result back to canonical form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import NotInvertibleError, RingError

Element = Union[int, Fraction]

MAX_PRIME = 2**31

_INT_RE = re.compile(r"-?[0-9]+")
_RAT_RE = re.compile(r"(-?[0-9]+)(?:/([1-9][0-9]*))?")
_FP_RE = re.compile(r"[0-9]+")
_SPEC_RE = re.compile(r"F([0-9]+)")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class RingSpec:
    kind: str  # "Z", "Q" or "F"
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "F"):
            raise RingError(f"unknown ring kind {self.kind!r}")
        if self.kind == "F":
            if not (2 <= self.p < MAX_PRIME) or not is_prime(self.p):
                raise RingError(f"F{self.p}: modulus must be a prime below 2^31")
        elif self.p:
            raise RingError(f"ring {self.kind} takes no modulus")

    @classmethod
    def integers(cls) -> RingSpec:
        return cls("Z")

    @classmethod
    def rationals(cls) -> RingSpec:
        return cls("Q")

    @classmethod
    def prime_field(cls, p: int) -> RingSpec:
        return cls("F", p)

    @classmethod
    def parse(cls, text: str) -> RingSpec:
        """Parse ``"Z"``, ``"Q"`` or ``"F<p>"``."""
        text = text.strip()
        if text in ("Z", "Q"):
            return cls(text)
        m = _SPEC_RE.fullmatch(text)
        if not m:
            raise RingError(f"unknown ring {text!r} (expected Z, Q or F<p>)")
        return cls("F", int(m.group(1)))

    def __str__(self) -> str:
        return f"F{self.p}" if self.kind == "F" else self.kind

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    # -- elements -------------------------------------------------------

    @property
    def zero(self) -> Element:
        return Fraction(0) if self.kind == "Q" else 0

    @property
    def one(self) -> Element:
        return Fraction(1) if self.kind == "Q" else 1

    def reduce(self, x) -> Element:
        """Bring a raw Python value (int or Fraction) into canonical form."""
        if self.kind == "F":
            if isinstance(x, Fraction):
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return x % self.p
        if self.kind == "Q":
            return x if isinstance(x, Fraction) else Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise RingError(f"{x} is not an integer")
            return x.numerator
        return x

    def element(self, x) -> Element:
        """Coerce an int, Fraction or element string into the ring."""
        if isinstance(x, str):
            return self.parse_element(x)
        return self.reduce(x)

    def parse_element(self, s: str) -> Element:
        if self.kind == "Z":
            if not _INT_RE.fullmatch(s):
                raise RingError(f"malformed integer {s!r}")
            return int(s)
        if self.kind == "Q":
            m = _RAT_RE.fullmatch(s)
            if not m:
                if re.fullmatch(r"-?[0-9]+/0+", s):
                    raise RingError(f"zero denominator in {s!r}")
                raise RingError(f"malformed rational {s!r}")
            num, den = m.group(1), m.group(2)
            return Fraction(int(num), int(den) if den else 1)
        if not _FP_RE.fullmatch(s):
            raise RingError(f"malformed F{self.p} element {s!r}")
        return int(s) % self.p

    def format_element(self, x: Element) -> str:
        if self.kind == "Q":
            x = Fraction(x)
            if x.denominator == 1:
                return str(x.numerator)
            return f"{x.numerator}/{x.denominator}"
        return str(x)

    def is_unit(self, x: Element) -> bool:
        if self.kind == "Z":
            return x in (1, -1)
        return x != 0

    def invert(self, x: Element) -> Element:
        if not self.is_unit(x):
            raise NotInvertibleError(f"{self.format_element(x)} is not invertible in {self}")
        if self.kind == "Z":
            return x
        if self.kind == "Q":
            return 1 / Fraction(x)
        return pow(x, -1, self.p)


ZZ = RingSpec.integers()
QQ = RingSpec.rationals()


def GF(p: int) -> RingSpec:
    return RingSpec.prime_field(p)


def parse_element(s: str, ring: RingSpec) -> Element:
    return ring.parse_element(s)


def format_element(x: Element, ring: RingSpec) -> str:
    return ring.format_element(x)


def is_unit(x: Element, ring: RingSpec) -> bool:
    return ring.is_unit(x)


def invert(x: Element, ring: RingSpec) -> Element:
    return ring.invert(x)
