"""
Finite Coxeter groups as dense tables.

Elements are enumerated breadth-first from the identity, so element ids are
ordered by length and id 0 is the identity.  Each connected component of the
Coxeter graph gets its own exact backend:

* rank 2, any m: closed-form dihedral action;
* rank >= 3 with m_ij in {2, 3, 4, 5, 6}: action of the Weyl group of a
  (generalized) Cartan matrix on weight coordinates, with entries in Z[phi],
  phi the golden ratio, so the non-crystallographic types H3 and H4 are exact.

Components are combined as a direct product.  Elements are keyed by their
action on a regular vector, which makes deduplication exact.

>>> G = build_group(CoxeterMatrix.from_type("A2"))
>>> G.size, G.canonical_word(G.w0)
(6, '1 2 1')
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

from .errors import BadDescriptor, BadGeneratorIndex, CapExceeded, InvalidMatrix
from .laurent import HalfLaurent

__all__ = [
    "CoxeterMatrix",
    "GroupTable",
    "build_group",
    "group_from_descriptor",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 100_000


@dataclass(frozen=True)
class CoxeterMatrix:
    n: int
    m: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidMatrix(f"generator count must be a positive integer, got {self.n!r}")
        if len(self.m) != self.n or any(len(row) != self.n for row in self.m):
            raise InvalidMatrix(f"matrix must be {self.n}x{self.n}")
        for i in range(self.n):
            for j in range(self.n):
                v = self.m[i][j]
                if not isinstance(v, int):
                    raise InvalidMatrix(f"entry ({i + 1},{j + 1}) is not an integer: {v!r}")
                if i == j and v != 1:
                    raise InvalidMatrix(f"diagonal entry ({i + 1},{i + 1}) must be 1, got {v}")
                if i != j:
                    if v < 2:
                        raise InvalidMatrix(f"off-diagonal entry ({i + 1},{j + 1}) must be >= 2, got {v}")
                    if v != self.m[j][i]:
                        raise InvalidMatrix(f"matrix is not symmetric at ({i + 1},{j + 1})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], name: str = "") -> CoxeterMatrix:
        return cls(len(rows), tuple(tuple(r) for r in rows), name)

    @classmethod
    def from_edges(cls, n: int, edges: dict[tuple[int, int], int], name: str = "") -> CoxeterMatrix:
        """Matrix with m_ij = 2 except the listed 0-based edges."""
        m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for (i, j), v in edges.items():
            m[i][j] = m[j][i] = v
        return cls.from_rows(m, name)

    @classmethod
    def from_type(cls, text: str) -> CoxeterMatrix:
        """Parse "A n", "B n", "C n", "D n", "E6".."E8", "F4", "G2", "H3", "H4", "I2(m)"."""
        s = "".join(text.split()).upper()
        m = re.fullmatch(r"I2\((\d+)\)", s)
        if m:
            k = int(m.group(1))
            if k < 2:
                raise BadDescriptor(f"I2(m) needs m >= 2: {text!r}")
            return cls.from_edges(2, {(0, 1): k}, f"I2({k})")
        m = re.fullmatch(r"([A-H])(\d+)", s)
        if not m:
            raise BadDescriptor(f"unrecognised group type {text!r}")
        letter, n = m.group(1), int(m.group(2))
        name = f"{letter}{n}"
        chain = {(i, i + 1): 3 for i in range(n - 1)}
        if letter == "A" and n >= 1:
            return cls.from_edges(n, chain, name)
        if letter in "BC" and n >= 2:
            chain[(n - 2, n - 1)] = 4
            return cls.from_edges(n, chain, name)
        if letter == "D" and n >= 4:
            edges = {(i, i + 1): 3 for i in range(n - 2)}
            edges[(n - 3, n - 1)] = 3
            return cls.from_edges(n, edges, name)
        if letter == "E" and n in (6, 7, 8):
            # Bourbaki labels 1,3,4,...,n form a chain; 2 hangs off 4
            order = [0] + list(range(2, n))
            edges = {(order[i], order[i + 1]): 3 for i in range(n - 2)}
            edges[(1, 3)] = 3
            return cls.from_edges(n, edges, name)
        if letter == "F" and n == 4:
            return cls.from_edges(4, {(0, 1): 3, (1, 2): 4, (2, 3): 3}, name)
        if letter == "G" and n == 2:
            return cls.from_edges(2, {(0, 1): 6}, name)
        if letter == "H" and n in (3, 4):
            chain[(0, 1)] = 5
            return cls.from_edges(n, chain, name)
        raise BadDescriptor(f"unsupported group type {text!r}")

    @classmethod
    def from_text(cls, text: str, name: str = "") -> CoxeterMatrix:
        """First line n, then n lines of n integers."""
        lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        try:
            if not lines or len(lines[0]) != 1:
                raise InvalidMatrix("first line must hold the generator count")
            n = int(lines[0][0])
            rows = [[int(v) for v in ln] for ln in lines[1:]]
        except ValueError as exc:
            raise InvalidMatrix(f"non-integer entry in matrix text: {exc}") from None
        if len(rows) != n:
            raise InvalidMatrix(f"expected {n} matrix rows, got {len(rows)}")
        return cls(n, tuple(tuple(r) for r in rows), name or "matrix")

    @classmethod
    def from_file(cls, path: str | Path) -> CoxeterMatrix:
        path = Path(path)
        return cls.from_text(path.read_text(), name=path.name)

    def is_crystallographic(self) -> bool:
        return all(v in (1, 2, 3, 4, 6) for row in self.m for v in row)

    def components(self) -> list[list[int]]:
        """Connected components of the Coxeter graph, each sorted."""
        seen: set[int] = set()
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(self.n):
                    if j not in seen and self.m[i][j] > 2:
                        seen.add(j)
                        stack.append(j)
            comps.append(sorted(comp))
        return comps

    def to_text(self) -> str:
        return "\n".join([str(self.n)] + [" ".join(map(str, row)) for row in self.m]) + "\n"


# ---------------------------------------------------------------------------
# exact backends

def _zphi_mul(a, b, c, d):
    # (a + b phi)(c + d phi), phi^2 = phi + 1
    bd = b * d
    return a * c + bd, a * d + b * c + bd


def _zphi_negative(a, b):
    # a + b*phi = (u + v*sqrt5)/2 with u = 2a + b, v = b
    u, v = 2 * a + b, b
    if v == 0:
        return u < 0
    if u >= 0 and v >= 0:
        return False
    if u <= 0 and v <= 0:
        return True
    if u > 0:
        return 5 * v * v > u * u
    return u * u > 5 * v * v


# 2cos(pi/m) products a_ij * a_ji, split into (a_ij, a_ji) in Z[phi]
_CARTAN = {
    2: ((0, 0), (0, 0)),
    3: ((-1, 0), (-1, 0)),
    4: ((-1, 0), (-2, 0)),
    5: ((0, -1), (0, -1)),
    6: ((-1, 0), (-3, 0)),
}


class _RootAction:
    """Weyl group of a Cartan matrix acting on the weight-coordinates of rho."""

    def __init__(self, m: Sequence[Sequence[int]]):
        k = len(m)
        self.k = k
        A = [[(2, 0) if i == j else None for j in range(k)] for i in range(k)]
        for i in range(k):
            for j in range(i + 1, k):
                v = m[i][j]
                if v not in _CARTAN:
                    raise CapExceeded(f"rank-{k} component with m = {v} is an infinite group")
                A[i][j], A[j][i] = _CARTAN[v]
        self.rows = A

    def identity(self):
        return (1, 0) * self.k

    def apply(self, key, s):
        a, b = key[2 * s], key[2 * s + 1]
        out = list(key)
        for j, (c, d) in enumerate(self.rows[s]):
            if c or d:
                x, y = _zphi_mul(a, b, c, d)
                out[2 * j] -= x
                out[2 * j + 1] -= y
        return tuple(out)

    def descent(self, key, s):
        return _zphi_negative(key[2 * s], key[2 * s + 1])


class _DihedralAction:
    """I2(m): key (first letter, length); first letter -1 for e and w0."""

    def __init__(self, m: int):
        self.m = m

    def identity(self):
        return (-1, 0)

    def apply(self, key, s):
        a, k = key
        m = self.m
        if k == m:
            return (1 - s, m - 1) if m > 1 else (-1, 0)
        if k == 0:
            return (-1, m) if m == 1 else (s, 1)
        if s == a:
            return (1 - a, k - 1) if k > 1 else (-1, 0)
        return (-1, m) if k + 1 == m else (s, k + 1)

    def descent(self, key, s):
        a, k = key
        return k == self.m or (k > 0 and a == s)


class _Product:
    def __init__(self, matrix: CoxeterMatrix):
        self.parts = []
        self.where = [None] * matrix.n
        for ci, comp in enumerate(matrix.components()):
            if len(comp) == 2:
                action = _DihedralAction(matrix.m[comp[0]][comp[1]])
            else:
                action = _RootAction([[matrix.m[i][j] for j in comp] for i in comp])
            self.parts.append(action)
            for li, g in enumerate(comp):
                self.where[g] = (ci, li)

    def identity(self):
        return tuple(p.identity() for p in self.parts)

    def apply(self, key, s):
        ci, li = self.where[s]
        out = list(key)
        out[ci] = self.parts[ci].apply(key[ci], li)
        return tuple(out)

    def descent(self, key, s):
        ci, li = self.where[s]
        return self.parts[ci].descent(key[ci], li)


# ---------------------------------------------------------------------------

class GroupTable:
    """
    A fully enumerated finite Coxeter group.

    Generators are 0-based internally and 1-based in word strings.  The
    table is immutable once built; interval masks are memoized lazily.
    """

    def __init__(self, matrix, length, left_mult, right_mult, left_descents,
                 right_descents, words, inverse, w0):
        self.matrix = matrix
        self.name = matrix.name or "W"
        self.rank = matrix.n
        self.size = len(length)
        self.length = length
        self.left_mult = left_mult
        self.right_mult = right_mult
        self.left_descents = left_descents
        self.right_descents = right_descents
        self.words = words
        self.inverse = inverse
        self.w0 = w0
        self._lower: dict[int, int] = {}
        self._upper: dict[int, int] = {}
        self._w0_left: list[int] | None = None

    def __repr__(self):
        return f"<GroupTable {self.name} |W|={self.size}>"

    def __len__(self):
        return self.size

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.size))

    @property
    def identity(self) -> int:
        return 0

    @property
    def max_length(self) -> int:
        return self.length[self.w0]

    def is_crystallographic(self) -> bool:
        return self.matrix.is_crystallographic()

    def generator(self, s: int) -> int:
        """Element id of the 0-based generator s."""
        return self.right_mult[0][s]

    # -- products -----------------------------------------------------------

    def mult(self, w: int, v: int) -> int:
        rm = self.right_mult
        for s in self.words[v]:
            w = rm[w][s]
        return w

    def inv(self, w: int) -> int:
        return self.inverse[w]

    def left_w0(self, w: int) -> int:
        """w0 * w."""
        if self._w0_left is None:
            self._w0_left = [self.mult(self.w0, u) for u in range(self.size)]
        return self._w0_left[w]

    def descent_list(self, w: int, side: str = "left") -> list[int]:
        bits = self.left_descents[w] if side == "left" else self.right_descents[w]
        return [s for s in range(self.rank) if bits >> s & 1]

    def first_left_descent(self, w: int) -> int:
        bits = self.left_descents[w]
        return (bits & -bits).bit_length() - 1

    # -- words --------------------------------------------------------------

    def parse_word(self, text: str | Sequence[int]) -> int:
        """Element of a word of 1-based generator indices; need not be reduced."""
        tokens = text.split() if isinstance(text, str) else list(text)
        w = 0
        for tok in tokens:
            try:
                s = int(tok)
            except (TypeError, ValueError):
                raise BadGeneratorIndex(f"not a generator index: {tok!r}") from None
            if not 1 <= s <= self.rank:
                raise BadGeneratorIndex(f"generator {s} out of range 1..{self.rank}")
            w = self.right_mult[w][s - 1]
        return w

    def canonical_word(self, w: int) -> str:
        return " ".join(str(s + 1) for s in self.words[w])

    # -- Bruhat order ------------------------------------------------------

    def bruhat_leq(self, y: int, x: int) -> bool:
        length, lm = self.length, self.left_mult
        while True:
            if y == x:
                return True
            if length[y] >= length[x]:
                return False
            s = self.first_left_descent(x)
            if self.left_descents[y] >> s & 1:
                y = lm[y][s]
            x = lm[x][s]

    def lower_mask(self, x: int) -> int:
        """Bitmask of {z : z <= x}, using [e, x] = [e, sx] u s[e, sx]."""
        memo = self._lower
        if x in memo:
            return memo[x]
        chain = []
        while x not in memo and x != 0:
            chain.append(x)
            x = self.left_mult[x][self.first_left_descent(x)]
        memo.setdefault(0, 1)
        lm = self.left_mult
        for x in reversed(chain):
            s = self.first_left_descent(x)
            below = memo[lm[x][s]]
            out = below
            bits = below
            while bits:
                low = bits & -bits
                z = low.bit_length() - 1
                out |= 1 << lm[z][s]
                bits ^= low
            memo[x] = out
        return memo[x]

    def upper_mask(self, y: int) -> int:
        """Bitmask of {z : z >= y}; left multiplication by w0 reverses the order."""
        got = self._upper.get(y)
        if got is not None:
            return got
        below = self.lower_mask(self.left_w0(y))
        lw0 = self.left_w0
        out = 0
        while below:
            low = below & -below
            out |= 1 << lw0(low.bit_length() - 1)
            below ^= low
        self._upper[y] = out
        return out

    def bruhat_interval(self, y: int, x: int) -> list[int]:
        """All z with y <= z <= x, sorted by (length, id)."""
        if y == x:
            return [x]
        if y == 0:
            mask = self.lower_mask(x)
        elif not self.bruhat_leq(y, x):
            return []
        else:
            mask = self.lower_mask(x) & self.upper_mask(y)
        return _bits(mask)

    def lower_interval(self, x: int) -> list[int]:
        return _bits(self.lower_mask(x))

    def bruhat_pairs(self) -> Iterator[tuple[int, int]]:
        """All (y, x) with y <= x, ordered by x then y (both by length, id)."""
        for x in range(self.size):
            for y in self.lower_interval(x):
                yield y, x

    # -- summaries ---------------------------------------------------------

    def length_histogram(self) -> list[int]:
        hist = [0] * (self.max_length + 1)
        for l in self.length:
            hist[l] += 1
        return hist

    def poincare_polynomial(self) -> HalfLaurent:
        """sum over w of q^|w|."""
        return HalfLaurent.from_coeffs(self.length_histogram())


def _bits(mask: int) -> list[int]:
    # ids are length-monotone, so id order is (length, id) order
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build_group(matrix: CoxeterMatrix, cap: int = DEFAULT_CAP) -> GroupTable:
    """Enumerate W completely, or raise CapExceeded past ``cap`` elements."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    n = matrix.n
    action = _Product(matrix)
    start = action.identity()
    index = {start: 0}
    keys = [start]
    length = [0]
    words: list[tuple[int, ...]] = [()]
    left_mult: list[list[int]] = []
    left_desc: list[int] = []
    i = 0
    while i < len(keys):
        key = keys[i]
        row = [0] * n
        bits = 0
        for s in range(n):
            if action.descent(key, s):
                bits |= 1 << s
            nk = action.apply(key, s)
            j = index.get(nk)
            if j is None:
                j = len(keys)
                if j >= cap:
                    raise CapExceeded(f"{matrix.name or 'group'} has more than {cap} elements")
                index[nk] = j
                keys.append(nk)
                length.append(length[i] + 1)
                words.append((s,) + words[i])
            row[s] = j
        left_mult.append(row)
        left_desc.append(bits)
        i += 1
    size = len(keys)

    inverse = [0] * size
    for w in range(size):
        e = 0
        for s in words[w]:
            e = left_mult[e][s]
        inverse[w] = e
    right_mult = [[inverse[left_mult[inverse[w]][s]] for s in range(n)] for w in range(size)]
    right_desc = [left_desc[inverse[w]] for w in range(size)]

    w0 = 0
    while True:
        for s in range(n):
            if not right_desc[w0] >> s & 1:
                w0 = right_mult[w0][s]
                break
        else:
            break

    return GroupTable(
        matrix,
        length,
        [tuple(r) for r in left_mult],
        [tuple(r) for r in right_mult],
        left_desc,
        right_desc,
        words,
        inverse,
        w0,
    )


def group_from_descriptor(text: str | None = None, matrix_file: str | Path | None = None,
                          cap: int = DEFAULT_CAP) -> GroupTable:
    if (text is None) == (matrix_file is None):
        raise BadDescriptor("give exactly one of a type string or a matrix file")
    if matrix_file is not None:
        matrix = CoxeterMatrix.from_file(matrix_file)
    else:
        matrix = CoxeterMatrix.from_type(text)
    return build_group(matrix, cap)
