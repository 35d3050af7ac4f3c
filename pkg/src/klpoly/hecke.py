"""
The generic Iwahori-Hecke algebra over Z[q^(1/2), q^(-1/2)].

Vectors are kept in the standard basis T_w.  The C and C' bases only exist as
T-expansions (``c_vector`` / ``cprime_vector``), which is enough to check the
expansion of C'_x in the C basis with Xi coefficients.

Multiplication on the right by a generator::

    T_w T_s = T_{ws}                     if |ws| > |w|
    T_w T_s = (q - 1) T_w + q T_{ws}     otherwise
"""
from __future__ import annotations

from typing import Mapping

from .coxeter import GroupTable
from .errors import GroupMismatch
from .klcore import KLCache
from .laurent import ONE, ZERO, HalfLaurent
from .xi import xi_a

__all__ = [
    "HeckeVector",
    "t_basis",
    "t_mult",
    "t_gen_right",
    "t_gen_left",
    "t_inverse",
    "r_from_t_inverse",
    "cprime_vector",
    "c_vector",
    "verify_7a",
]

_Q = HalfLaurent.q()
_QM1 = _Q - 1
_QINV = HalfLaurent.q(-1)
_QINV_M1 = _QINV - 1


class HeckeVector:
    """Finite sum of T_w with HalfLaurent coefficients over one group."""

    __slots__ = ("group", "entries", "basis")

    def __init__(self, group: GroupTable, entries: Mapping[int, HalfLaurent] | None = None, basis: str = "T"):
        self.group = group
        self.basis = basis
        self.entries = {w: c for w, c in (entries or {}).items() if c}

    def __repr__(self):
        return f"<HeckeVector[{self.basis}] {self}>"

    def __str__(self):
        if not self.entries:
            return "0"
        g = self.group
        tag = "Cprime" if self.basis == "Cprime" else self.basis
        return " + ".join(
            f"({c}) * {tag}[{g.canonical_word(w)}]" for w, c in sorted(self.entries.items())
        )

    def coeff(self, w: int) -> HalfLaurent:
        return self.entries.get(w, ZERO)

    def _check(self, other: HeckeVector):
        if other.group is not self.group:
            raise GroupMismatch("Hecke vectors live over different groups")
        if other.basis != self.basis:
            raise GroupMismatch(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other: HeckeVector) -> HeckeVector:
        self._check(other)
        out = dict(self.entries)
        for w, c in other.entries.items():
            out[w] = out.get(w, ZERO) + c
        return HeckeVector(self.group, out, self.basis)

    def __sub__(self, other: HeckeVector) -> HeckeVector:
        return self + other.scale(-ONE)

    def scale(self, c: HalfLaurent | int) -> HeckeVector:
        if isinstance(c, int):
            c = HalfLaurent.const(c)
        return HeckeVector(self.group, {w: v * c for w, v in self.entries.items()}, self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeVector):
            return NotImplemented
        return other.group is self.group and other.basis == self.basis and self.entries == other.entries

    def __mul__(self, other: HeckeVector) -> HeckeVector:
        return t_mult(self.group, self, other)


def t_basis(group: GroupTable, w: int, coeff: HalfLaurent = ONE) -> HeckeVector:
    return HeckeVector(group, {w: coeff})


def t_gen_right(vec: HeckeVector, s: int) -> HeckeVector:
    """vec * T_s."""
    g = vec.group
    rm, length = g.right_mult, g.length
    out: dict[int, HalfLaurent] = {}
    for w, c in vec.entries.items():
        ws = rm[w][s]
        if length[ws] > length[w]:
            out[ws] = out.get(ws, ZERO) + c
        else:
            out[w] = out.get(w, ZERO) + c * _QM1
            out[ws] = out.get(ws, ZERO) + c * _Q
    return HeckeVector(g, out)


def t_gen_left(vec: HeckeVector, s: int) -> HeckeVector:
    """T_s * vec."""
    g = vec.group
    lm, length = g.left_mult, g.length
    out: dict[int, HalfLaurent] = {}
    for w, c in vec.entries.items():
        sw = lm[w][s]
        if length[sw] > length[w]:
            out[sw] = out.get(sw, ZERO) + c
        else:
            out[w] = out.get(w, ZERO) + c * _QM1
            out[sw] = out.get(sw, ZERO) + c * _Q
    return HeckeVector(g, out)


def t_mult(group: GroupTable, a: HeckeVector, b: HeckeVector) -> HeckeVector:
    """a * b in the T basis, by folding each T_v of b through generators."""
    for v in (a, b):
        if v.group is not group:
            raise GroupMismatch("Hecke vector does not belong to this group")
        if v.basis != "T":
            raise GroupMismatch("t_mult needs T-basis vectors")
    result = HeckeVector(group)
    for v, c in b.entries.items():
        part = a
        for s in group.words[v]:
            part = t_gen_right(part, s)
        result = result + part.scale(c)
    return result


def t_inverse(group: GroupTable, x: int) -> HeckeVector:
    """(T_{x^-1})^-1, using T_s^-1 = q^-1 T_s + (q^-1 - 1) T_e along a reduced word of x."""
    vec = t_basis(group, 0)
    for s in group.words[x]:
        vec = t_gen_right(vec, s).scale(_QINV) + vec.scale(_QINV_M1)
    return vec


def r_from_t_inverse(group: GroupTable, x: int) -> dict[int, HalfLaurent]:
    """R_{y,x} for all y, read off (T_{x^-1})^-1 = q^-|x| sum (-1)^{|x|-|y|} R_{y,x} T_y."""
    lx = group.length[x]
    out = {}
    for y, c in t_inverse(group, x).entries.items():
        r = c.scale_pow(2 * lx)
        out[y] = -r if (lx - group.length[y]) % 2 else r
    return out


def cprime_vector(cache: KLCache, x: int) -> HeckeVector:
    """C'_x = q^{-|x|/2} sum_{y <= x} P_{y,x} T_y."""
    g = cache.group
    shift = -g.length[x]
    return HeckeVector(g, {y: cache.p_poly(y, x).scale_pow(shift) for y in g.lower_interval(x)})


def c_vector(cache: KLCache, x: int) -> HeckeVector:
    """C_x = sum_{y <= x} (-1)^{|x|+|y|} q^{|x|/2 - |y|} bar(P_{y,x}) T_y."""
    g = cache.group
    lx = g.length[x]
    out = {}
    for y in g.lower_interval(x):
        c = cache.p_poly(y, x).bar().scale_pow(lx - 2 * g.length[y])
        out[y] = -c if (lx - g.length[y]) % 2 else c
    return HeckeVector(g, out)


def verify_7a(cache: KLCache, x: int) -> bool:
    """C'_x == sum_{y <= x} q^{(|y|-|x|)/2} Xi_{y,x} C_y, compared in the T basis."""
    g = cache.group
    lx = g.length[x]
    rhs = HeckeVector(g)
    for y in g.lower_interval(x):
        coef = xi_a(cache, y, x).scale_pow(g.length[y] - lx)
        rhs = rhs + c_vector(cache, y).scale(coef)
    return rhs == cprime_vector(cache, x)
