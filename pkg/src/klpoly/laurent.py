"""
Exact Laurent polynomials in q with half-integer exponents.

A polynomial is stored as a mapping ``h -> c`` meaning ``c * q^(h/2)``, so the
exponent ``h`` is counted in half-units.  Coefficients are Python ints and never
overflow.  Values are immutable.

Text format (used by the CLI, the cache file and test fixtures): terms in
ascending exponent order, ``q`` / ``q^k`` / ``q^(k/2)``, explicit `` + `` and
`` - `` separators, unit coefficients omitted except on the constant term.

>>> q = HalfLaurent.q()
>>> str((q - 1) * (q + 1))
'-1 + q^2'
>>> str((1 + q).bar())
'q^-1 + 1'
"""
from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

from .errors import PolynomialParseError, ZeroPolynomial

__all__ = ["HalfLaurent", "ZERO", "ONE"]


class HalfLaurent:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for h, c in terms.items():
                if c:
                    clean[int(h)] = int(c)
        self._terms = clean
        self._hash = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> HalfLaurent:
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> HalfLaurent:
        return cls._raw({0: c} if c else {})

    @classmethod
    def q(cls, k: int = 1) -> HalfLaurent:
        """The monomial q^k for integer k."""
        return cls._raw({2 * k: 1})

    @classmethod
    def monomial(cls, h: int, c: int = 1) -> HalfLaurent:
        """c * q^(h/2)."""
        return cls._raw({h: c} if c else {})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], start: int = 0) -> HalfLaurent:
        """Integer-exponent polynomial sum(coeffs[i] * q^(start + i))."""
        return cls({2 * (start + i): c for i, c in enumerate(coeffs)})

    # -- inspection ------------------------------------------------------

    def terms(self) -> dict[int, int]:
        """Copy of the half-unit exponent map."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._terms.items()))

    def coeff(self, h: int) -> int:
        return self._terms.get(h, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        return all(h % 2 == 0 for h in self._terms)

    def is_polynomial(self) -> bool:
        """Integral with no negative powers of q."""
        return all(h % 2 == 0 and h >= 0 for h in self._terms)

    def degree_bounds(self) -> tuple[int, int]:
        """(min h, max h) in half-units."""
        if not self._terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return min(self._terms), max(self._terms)

    def degree(self) -> int:
        """Degree in q; only meaningful for integral polynomials."""
        lo, hi = self.degree_bounds()
        return hi // 2

    def leading_coeff(self) -> int:
        return self._terms[self.degree_bounds()[1]]

    def coeff_vector(self) -> list[int]:
        """[a_0, ..., a_d] for a polynomial in q (integral, no negative powers)."""
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial in q: {self}")
        if not self._terms:
            return []
        return [self._terms.get(2 * i, 0) for i in range(self.degree() + 1)]

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other) -> HalfLaurent:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for h, c in other._terms.items():
            v = out.get(h, 0) + c
            if v:
                out[h] = v
            else:
                del out[h]
        return HalfLaurent._raw(out)

    __radd__ = __add__

    def __neg__(self) -> HalfLaurent:
        return HalfLaurent._raw({h: -c for h, c in self._terms.items()})

    def __sub__(self, other) -> HalfLaurent:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> HalfLaurent:
        return (-self) + other

    def __mul__(self, other) -> HalfLaurent:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for h1, c1 in a.items():
            for h2, c2 in b.items():
                h = h1 + h2
                out[h] = get(h, 0) + c1 * c2
        return HalfLaurent._raw({h: c for h, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> HalfLaurent:
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale_pow(self, h: int) -> HalfLaurent:
        """Multiply by q^(h/2)."""
        if not h:
            return self
        return HalfLaurent._raw({e + h: c for e, c in self._terms.items()})

    def scale(self, c: int) -> HalfLaurent:
        if not c:
            return ZERO
        return HalfLaurent._raw({h: c * v for h, v in self._terms.items()})

    def bar(self) -> HalfLaurent:
        """The involution q -> q^-1."""
        return HalfLaurent._raw({-h: c for h, c in self._terms.items()})

    def is_palindromic_shifted(self, shift: int) -> bool:
        """True iff bar(p) == q^(shift/2) * p."""
        return self.bar() == self.scale_pow(shift)

    # -- comparison ------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (h, c) in enumerate(sorted(self._terms.items())):
            body = _render_term(h, abs(c))
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"HalfLaurent({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> HalfLaurent:
        """Inverse of ``str``; also tolerates missing spaces and ``*``."""
        return _parse(text)


def _coerce(x):
    if isinstance(x, HalfLaurent):
        return x
    if isinstance(x, int):
        return HalfLaurent.const(x)
    return NotImplemented


def _render_term(h: int, c: int) -> str:
    if h == 0:
        return str(c)
    if h == 2:
        base = "q"
    elif h % 2 == 0:
        base = f"q^{h // 2}"
    else:
        base = f"q^({h}/2)"
    return base if c == 1 else f"{c}*{base}"


_TERM = re.compile(
    r"""
    (?P<sign>[+-])?
    (?P<coef>\d+)?
    (?:(?P<star>\*)?
       (?P<q>q)
       (?:\^(?:(?P<int>-?\d+)|\((?P<half>-?\d+)/2\)))?
    )?
    """,
    re.VERBOSE,
)


def _parse(text: str) -> HalfLaurent:
    s = "".join(text.split()).replace("−", "-")
    if not s:
        raise PolynomialParseError("empty polynomial text")
    out: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not m.group("coef") and not m.group("q")):
            raise PolynomialParseError(f"cannot parse polynomial {text!r} at offset {pos}")
        if not first and not m.group("sign"):
            raise PolynomialParseError(f"missing sign between terms in {text!r}")
        if m.group("star") and not m.group("coef"):
            raise PolynomialParseError(f"dangling '*' in {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coef = int(m.group("coef")) if m.group("coef") else 1
        if not m.group("q"):
            h = 0
        elif m.group("int") is not None:
            h = 2 * int(m.group("int"))
        elif m.group("half") is not None:
            h = int(m.group("half"))
        else:
            h = 2
        out[h] = out.get(h, 0) + sign * coef
        pos = m.end()
        first = False
    return HalfLaurent(out)


def add_product(out: dict[int, int], a: HalfLaurent, b: HalfLaurent, sign: int = 1,
                shift: int = 0, bar_b: bool = False) -> None:
    """In place: ``out += sign * q^(shift/2) * a * b`` on raw half-unit terms.

    With ``bar_b`` the second factor is replaced by its bar image.  Used by
    the long interval sums, where building intermediate objects dominates.
    """
    get = out.get
    bt = b._terms
    if bar_b:
        for h1, c1 in a._terms.items():
            c1 *= sign
            base = h1 + shift
            for h2, c2 in bt.items():
                h = base - h2
                out[h] = get(h, 0) + c1 * c2
    else:
        for h1, c1 in a._terms.items():
            c1 *= sign
            base = h1 + shift
            for h2, c2 in bt.items():
                h = base + h2
                out[h] = get(h, 0) + c1 * c2


def from_terms(out: dict[int, int]) -> HalfLaurent:
    """Freeze a raw term dict (as filled by ``add_product``), dropping zeros."""
    return HalfLaurent._raw({h: c for h, c in out.items() if c})


ZERO = HalfLaurent._raw({})
ONE = HalfLaurent._raw({0: 1})
