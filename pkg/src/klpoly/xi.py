"""
The interval polynomials Xi_{y,x} and their coefficient analysis.

Xi is built three ways:

* ``xi_a``: sum over y <= y' <= x' <= x of Q_{y,y'} R_{y',x'} P_{x',x};
* ``xi_b``: q^{|x|} sum over y <= y' <= x of q^{-|y'|} Q_{y,y'} bar(P_{y',x});
* ``xi_c``: q^{-|y|} sum over y <= x' <= x of q^{|x'|} bar(Q_{y,x'}) P_{x',x}.

``xi_a`` is the definition; the single sums are the fast forms used by scans.
All three are memoized on the cache's ``derived`` store.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ChainViolation, InternalDegreeViolation
from .klcore import KLCache
from .laurent import ONE, ZERO, HalfLaurent, add_product, from_terms

__all__ = [
    "XiAnalysis",
    "xi",
    "xi_a",
    "xi_b",
    "xi_c",
    "xi_duality_check",
    "xi_orthogonality",
    "analyze_xi",
    "local_ic_poincare",
    "richardson_poincare",
]


def _checked(cache: KLCache, y: int, x: int, val: HalfLaurent, form: str) -> HalfLaurent:
    if not val.is_polynomial():
        g = cache.group
        raise InternalDegreeViolation(
            f"Xi^{form}[{g.canonical_word(y)}; {g.canonical_word(x)}] = {val} is not a polynomial in q"
        )
    return val


def _inner_rp(cache: KLCache, yp: int, x: int) -> HalfLaurent:
    """sum over yp <= x' <= x of R_{yp,x'} P_{x',x}."""
    key = ("RP", yp, x)
    got = cache.derived.get(key)
    if got is not None:
        return got
    out: dict[int, int] = {}
    for xp in cache.group.bruhat_interval(yp, x):
        add_product(out, cache.r_poly(yp, xp), cache.p_poly(xp, x))
    acc = from_terms(out)
    cache.derived[key] = acc
    return acc


def xi_a(cache: KLCache, y: int, x: int) -> HalfLaurent:
    cache.require_leq(y, x)
    if y == x:
        return ONE
    key = ("Xa", y, x)
    got = cache.derived.get(key)
    if got is not None:
        return got
    # the double sum, grouped by y'
    out: dict[int, int] = {}
    for yp in cache.group.bruhat_interval(y, x):
        add_product(out, cache.q_poly(y, yp), _inner_rp(cache, yp, x))
    acc = _checked(cache, y, x, from_terms(out), "a")
    cache.derived[key] = acc
    return acc


def xi_b(cache: KLCache, y: int, x: int) -> HalfLaurent:
    cache.require_leq(y, x)
    if y == x:
        return ONE
    key = ("Xb", y, x)
    got = cache.derived.get(key)
    if got is not None:
        return got
    length = cache.group.length
    store = cache.pq_tables(y, x)
    out: dict[int, int] = {}
    lx = length[x]
    for yp in cache.group.bruhat_interval(y, x):
        add_product(out, store["Q", y, yp], store["P", yp, x], shift=2 * (lx - length[yp]), bar_b=True)
    acc = _checked(cache, y, x, from_terms(out), "b")
    cache.derived[key] = acc
    return acc


def xi_c(cache: KLCache, y: int, x: int) -> HalfLaurent:
    cache.require_leq(y, x)
    if y == x:
        return ONE
    key = ("Xc", y, x)
    got = cache.derived.get(key)
    if got is not None:
        return got
    length = cache.group.length
    store = cache.pq_tables(y, x)
    out: dict[int, int] = {}
    ly = length[y]
    for xp in cache.group.bruhat_interval(y, x):
        add_product(out, store["P", xp, x], store["Q", y, xp], shift=2 * (length[xp] - ly), bar_b=True)
    acc = _checked(cache, y, x, from_terms(out), "c")
    cache.derived[key] = acc
    return acc


_FORMS = {"a": xi_a, "b": xi_b, "c": xi_c}


def xi(cache: KLCache, y: int, x: int, form: str = "b") -> HalfLaurent:
    """Xi_{y,x} by the named form ("a", "b" or "c")."""
    try:
        fn = _FORMS[form]
    except KeyError:
        raise ValueError(f"unknown Xi form {form!r}") from None
    return fn(cache, y, x)


def xi_duality_check(cache: KLCache, y: int, x: int, form: str = "b") -> bool:
    """bar(Xi_{y,x}) == q^{|y|-|x|} Xi_{y,x}."""
    length = cache.group.length
    return xi(cache, y, x, form).is_palindromic_shifted(2 * (length[y] - length[x]))


def xi_orthogonality(cache: KLCache, y: int, x: int, form: str = "b") -> HalfLaurent:
    """sum over y <= z <= x of (-1)^{|y|+|z|} Xi_{y,z} Xi_{z,x}; should be delta_{y,x}."""
    cache.require_leq(y, x)
    length = cache.group.length
    acc = ZERO
    for z in cache.group.bruhat_interval(y, x):
        term = xi(cache, y, z, form) * xi(cache, z, x, form)
        acc = acc - term if (length[z] - length[y]) % 2 else acc + term
    return acc


@dataclass(frozen=True)
class XiAnalysis:
    N: int
    a: tuple[int, ...]
    palindromic: bool
    monic_ends: bool
    nonnegative: bool
    unimodal_to_middle: bool

    @classmethod
    def from_coeffs(cls, N: int, a) -> XiAnalysis:
        a = tuple(a)
        full = len(a) == N + 1
        mid = (N + 1) // 2
        head = a[: mid + 1]
        return cls(
            N=N,
            a=a,
            palindromic=full and a == a[::-1],
            monic_ends=full and a[0] == 1 and a[-1] == 1,
            nonnegative=all(c >= 0 for c in a),
            unimodal_to_middle=full and head[0] >= 0 and all(u <= v for u, v in zip(head, head[1:])),
        )

    @property
    def asserted_ok(self) -> bool:
        return self.palindromic and self.monic_ends

    @property
    def positivity_ok(self) -> bool:
        return self.nonnegative and self.unimodal_to_middle


def analyze_xi(cache: KLCache, y: int, x: int, form: str = "b") -> XiAnalysis:
    val = xi(cache, y, x, form)
    N = cache.group.length[x] - cache.group.length[y]
    return XiAnalysis.from_coeffs(N, val.coeff_vector())


def local_ic_poincare(cache: KLCache, y: int, x: int, yp: int, xp: int) -> HalfLaurent:
    """Q_{y,y'} P_{x',x}: even-degree local IC Poincare polynomial (q <-> degree 2)."""
    if not (cache.leq(y, yp) and cache.leq(yp, xp) and cache.leq(xp, x)):
        g = cache.group
        words = ", ".join(g.canonical_word(w) or "e" for w in (y, yp, xp, x))
        raise ChainViolation(f"not comparable: [{words}] is not a chain y <= y' <= x' <= x")
    return cache.q_poly(y, yp) * cache.p_poly(xp, x)


def richardson_poincare(cache: KLCache, y: int, x: int) -> HalfLaurent:
    """sum_j dim H^{2j} q^j for the closed Richardson variety; equal to xi_a."""
    return xi_a(cache, y, x)
