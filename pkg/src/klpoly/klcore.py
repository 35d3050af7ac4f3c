"""
Kazhdan-Lusztig R-, P- and inverse Q-polynomials with memoization.

All three are computed over a :class:`~klpoly.coxeter.GroupTable` and cached
per ``(kind, y, x)``.  ``y`` not below ``x`` gives the zero polynomial.

Recursions (s a left descent of x, chosen as the smallest one by default):

* ``R_{y,x} = R_{sy,sx}`` if sy < y, else ``(q-1) R_{y,sx} + q R_{sy,sx}``;
* ``P_{y,x} = q^{1-c} P_{sy,sx} + q^c P_{y,sx}
  - sum_{y<=z<sx, sz<z} mu(z,sx) q^{(|x|-|z|)/2} P_{y,z}`` with c = [sy < y];
* Q inverts the signed P-matrix:
  ``sum_{y<=z<=x} (-1)^{|y|+|z|} Q_{y,z} P_{z,x} = delta_{y,x}``.
"""
from __future__ import annotations

import threading
from pathlib import Path
from typing import NamedTuple

from .coxeter import GroupTable, _bits
from .errors import CacheFormatError, InternalDegreeViolation, NotComparable
from .laurent import ONE, ZERO, HalfLaurent, add_product, from_terms

__all__ = ["KLCache", "BarReport", "KINDS"]

KINDS = ("P", "R", "Q")

_Q = HalfLaurent.q()
_Q_MINUS_1 = _Q - 1


class BarReport(NamedTuple):
    p: bool
    r: bool
    q: bool

    def all(self) -> bool:
        return self.p and self.r and self.q


class KLCache:
    """Memo store for P, R, Q over one group.

    ``pivot`` picks which left descent drives the recursions: ``"min"`` (the
    default) or ``"max"``.  Results do not depend on it.
    """

    def __init__(self, group: GroupTable, pivot: str = "min", cache_file: str | Path | None = None):
        if pivot not in ("min", "max"):
            raise ValueError(f"pivot must be 'min' or 'max', not {pivot!r}")
        self.group = group
        self.pivot = pivot
        self.store: dict[tuple[str, int, int], HalfLaurent] = {}
        self._lock = threading.Lock()
        self._p_done: set[int] = set()
        self._q_done: set[int] = set()
        self._mu_lists: dict[int, list[tuple[int, int]]] = {}
        self._pending_file = Path(cache_file) if cache_file is not None else None
        # memo space for quantities built on top of P, R, Q (e.g. Xi)
        self.derived: dict[tuple, HalfLaurent] = {}

    def __repr__(self):
        return f"<KLCache {self.group.name} entries={len(self.store)}>"

    # -- helpers -------------------------------------------------------------

    def _put(self, key, value):
        with self._lock:
            self.store[key] = value

    def _get(self, key):
        if self._pending_file is not None:
            self._load_pending()
        return self.store.get(key)

    def _descent(self, x: int) -> int:
        bits = self.group.left_descents[x]
        if self.pivot == "min":
            return (bits & -bits).bit_length() - 1
        return bits.bit_length() - 1

    def leq(self, y: int, x: int) -> bool:
        return bool(self.group.lower_mask(x) >> y & 1)

    def require_leq(self, y: int, x: int):
        if not self.leq(y, x):
            g = self.group
            raise NotComparable(
                f"not comparable: [{g.canonical_word(y)}] is not below [{g.canonical_word(x)}] in {g.name}"
            )

    # -- R -------------------------------------------------------------------

    def r_poly(self, y: int, x: int) -> HalfLaurent:
        if y == x:
            return ONE
        if not self.leq(y, x):
            return ZERO
        key = ("R", y, x)
        val = self._get(key)
        if val is not None:
            return val
        g = self.group
        s = self._descent(x)
        sx = g.left_mult[x][s]
        sy = g.left_mult[y][s]
        if g.left_descents[y] >> s & 1:
            val = self.r_poly(sy, sx)
        else:
            val = _Q_MINUS_1 * self.r_poly(y, sx) + _Q * self.r_poly(sy, sx)
        self._put(key, val)
        return val

    # -- P -------------------------------------------------------------------

    def p_poly(self, y: int, x: int) -> HalfLaurent:
        if y == x:
            return ONE
        if not self.leq(y, x):
            return ZERO
        val = self._get(("P", y, x))
        if val is not None:
            return val
        self._p_column(x)
        return self.store[("P", y, x)]

    def _p_column(self, x: int):
        if x in self._p_done:
            return
        g = self.group
        store = self.store
        if x == 0:
            self._put(("P", 0, 0), ONE)
            self._p_done.add(0)
            return
        s = self._descent(x)
        v = g.left_mult[x][s]
        self._p_column(v)
        lx = g.length[x]
        # correction terms: z < v with sz < z and mu(z, v) != 0
        corr = []
        for z, m in self.mu_list(v):
            if g.left_descents[z] >> s & 1:
                self._p_column(z)
                corr.append((z, m, lx - g.length[z], g.lower_mask(z)))
        lm = g.left_mult
        for y in g.lower_interval(x):
            if y == x:
                self._put(("P", y, x), ONE)
                continue
            sy = lm[y][s]
            if g.left_descents[y] >> s & 1:
                val = self.p_poly(sy, v) + self.p_poly(y, v).scale_pow(2)
            else:
                val = self.p_poly(sy, v).scale_pow(2) + self.p_poly(y, v)
            for z, m, d, zmask in corr:
                if zmask >> y & 1:
                    val = val - store[("P", y, z)].scale(m).scale_pow(d)
            bound = lx - g.length[y] - 1
            if val and (not val.is_polynomial() or 2 * val.degree() > bound):
                raise InternalDegreeViolation(
                    f"P_{{{g.canonical_word(y)},{g.canonical_word(x)}}} = {val} breaks the degree bound"
                )
            self._put(("P", y, x), val)
        self._p_done.add(x)

    def mu(self, y: int, x: int) -> int:
        self.require_leq(y, x)
        d = self.group.length[x] - self.group.length[y]
        if d % 2 == 0:
            return 0
        return self.p_poly(y, x).coeff(d - 1)

    def mu_list(self, x: int) -> list[tuple[int, int]]:
        """[(z, mu(z, x))] for z < x with nonzero mu, in id order."""
        got = self._mu_lists.get(x)
        if got is not None:
            return got
        self._p_column(x)
        g = self.group
        out = []
        for z in g.lower_interval(x):
            d = g.length[x] - g.length[z]
            if d % 2 == 1:
                m = self.store[("P", z, x)].coeff(d - 1)
                if m:
                    out.append((z, m))
        self._mu_lists[x] = out
        return out

    # -- Q -------------------------------------------------------------------

    def q_poly(self, y: int, x: int) -> HalfLaurent:
        if y == x:
            return ONE
        if not self.leq(y, x):
            return ZERO
        val = self._get(("Q", y, x))
        if val is not None:
            return val
        self._q_row(y)
        return self.store[("Q", y, x)]

    def _q_row(self, y: int):
        """Solve Q_{y,x} for every x >= y, in increasing length."""
        if y in self._q_done:
            return
        g = self.group
        store = self.store
        length = g.length
        up = g.upper_mask(y)
        ly = length[y]
        row: dict[int, HalfLaurent] = {}
        for x in _bits(up):
            if x == y:
                row[y] = ONE
                self._put(("Q", y, y), ONE)
                continue
            self._p_column(x)
            out: dict[int, int] = {}
            for z in _bits(up & g.lower_mask(x)):
                if z == x:
                    continue
                add_product(out, row[z], store[("P", z, x)], -1 if (length[z] - ly) % 2 else 1)
            # coefficient of Q_{y,x} in the relation is (-1)^{|x|-|y|}
            acc = from_terms(out)
            row[x] = acc if (length[x] - ly) % 2 else -acc
            self._put(("Q", y, x), row[x])
        self._q_done.add(y)

    def pq_tables(self, y: int, x: int) -> dict:
        """Fill the Q row of y and the P column of x; return the raw store.

        Afterwards ``store["Q", y, z]`` and ``store["P", z, x]`` exist for
        every z in [y, x], diagonal included.
        """
        if self._pending_file is not None:
            self._load_pending()
        self._q_row(y)
        self._p_column(x)
        return self.store

    # -- identities ----------------------------------------------------------

    def check_bar_identities(self, y: int, x: int) -> BarReport:
        """Test the bar-involution formulas for P_{y,x}, R_{y,x} and Q_{y,x}."""
        self.require_leq(y, x)
        g = self.group
        d = g.length[x] - g.length[y]
        interval = g.bruhat_interval(y, x)
        rhs_p = ZERO
        rhs_q = ZERO
        for u in interval:
            rhs_p = rhs_p + self.r_poly(y, u) * self.p_poly(u, x)
            rhs_q = rhs_q + self.q_poly(y, u) * self.r_poly(u, x)
        r = self.r_poly(y, x)
        r_rhs = r.scale_pow(-2 * d)
        if d % 2:
            r_rhs = -r_rhs
        return BarReport(
            p=self.p_poly(y, x).bar() == rhs_p.scale_pow(-2 * d),
            r=r.bar() == r_rhs,
            q=self.q_poly(y, x).bar() == rhs_q.scale_pow(-2 * d),
        )

    # -- on-disk cache -------------------------------------------------------

    def _load_pending(self):
        path, self._pending_file = self._pending_file, None
        if path.exists():
            self.load(path)

    def load(self, path: str | Path) -> int:
        """Read ``kind<TAB>y-word<TAB>x-word<TAB>poly`` records; returns count."""
        g = self.group
        loaded = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.rstrip("\n")
                if not line.strip():
                    continue
                parts = line.split("\t")
                where = f"{path}:{lineno}"
                if len(parts) != 4:
                    raise CacheFormatError(f"{where}: expected 4 tab-separated fields")
                kind, yw, xw, text = parts
                if kind not in KINDS:
                    raise CacheFormatError(f"{where}: unknown kind {kind!r}")
                try:
                    y, x = g.parse_word(yw), g.parse_word(xw)
                    val = HalfLaurent.parse(text)
                except ValueError as exc:
                    raise CacheFormatError(f"{where}: {exc}") from None
                _validate_record(g, kind, y, x, val, where, self.leq(y, x))
                loaded[(kind, y, x)] = val
        with self._lock:
            for k, v in loaded.items():
                self.store.setdefault(k, v)
        return len(loaded)

    def save(self, path: str | Path) -> int:
        g = self.group
        with self._lock:
            items = sorted(self.store.items(), key=lambda kv: (kv[0][0], kv[0][2], kv[0][1]))
        with open(path, "w", encoding="utf-8") as fh:
            for (kind, y, x), val in items:
                fh.write(f"{kind}\t{g.canonical_word(y)}\t{g.canonical_word(x)}\t{val}\n")
        return len(items)


def _validate_record(g, kind, y, x, val, where, comparable):
    if not comparable:
        raise CacheFormatError(f"{where}: y is not below x in {g.name}")
    if not val.is_polynomial():
        raise CacheFormatError(f"{where}: {kind} value {val} is not a polynomial in q")
    d = g.length[x] - g.length[y]
    if kind == "P" and (val.coeff(0) != 1 or 2 * val.degree() > max(d - 1, 0)):
        raise CacheFormatError(f"{where}: {val} is not a valid P-polynomial here")
    if kind == "R" and (val.degree() != d or val.leading_coeff() != 1 or val.coeff(0) != (-1) ** d):
        raise CacheFormatError(f"{where}: {val} is not a valid R-polynomial here")
    if kind == "Q" and val.coeff(0) != 1:
        raise CacheFormatError(f"{where}: {val} is not a valid Q-polynomial here")

