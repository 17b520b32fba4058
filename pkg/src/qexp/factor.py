"""Factorization shapes of binary forms over F_p: splitting types, singularity
tests, and quadratic symbols, via squarefree decomposition and distinct-degree
factorization (no root-finding needed)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ff import inv_mod, legendre
from .forms import BinaryForm, disc_quadratic

# Univariate polynomials below are coefficient lists in ascending order,
# stripped of trailing zeros; [] is the zero polynomial.


def _strip(f: Sequence[int], p: int) -> list[int]:
    out = [c % p for c in f]
    while out and out[-1] == 0:
        out.pop()
    return out


def _deriv(f: Sequence[int], p: int) -> list[int]:
    return _strip([(k * f[k]) % p for k in range(1, len(f))], p)


def _mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def _mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _strip(a, p)
    b = _strip(b, p)
    if not b:
        raise ZeroDivisionError("polynomial remainder by zero")
    binv = inv_mod(b[-1], p)
    while len(a) >= len(b):
        c = a[-1] * binv % p
        sh = len(a) - len(b)
        for i, bc in enumerate(b):
            a[sh + i] = (a[sh + i] - c * bc) % p
        a = _strip(a, p)
        if not a:
            break
    return a


def _div(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _strip(a, p)
    b = _strip(b, p)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * (len(a) - len(b) + 1) if len(a) >= len(b) else []
    binv = inv_mod(b[-1], p)
    while a and len(a) >= len(b):
        c = a[-1] * binv % p
        sh = len(a) - len(b)
        q[sh] = c
        for i, bc in enumerate(b):
            a[sh + i] = (a[sh + i] - c * bc) % p
        a = _strip(a, p)
    if a:
        raise ValueError("polynomial division left a remainder")
    return _strip(q, p)


def _gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _strip(a, p)
    b = _strip(b, p)
    while b:
        a, b = b, _mod(a, b, p)
    if a:
        inv = inv_mod(a[-1], p)
        a = [c * inv % p for c in a]
    return a


def _sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c % p
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _strip(out, p)


def _pow_mod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    r = [1]
    b = _mod(base, mod, p)
    while e:
        if e & 1:
            r = _mod(_mul(r, b, p), mod, p)
        b = _mod(_mul(b, b, p), mod, p)
        e >>= 1
    return r


def _pth_root(f: Sequence[int], p: int) -> list[int]:
    # Over the prime field, f'(t) = 0 forces f(t) = u(t^p) = u(t)^p with
    # u_k = f_(pk), because c^p = c for every c in F_p.
    return [f[k] for k in range(0, len(f), p)]


def _squarefree_decomposition(f: Sequence[int], p: int) -> dict[int, list[int]]:
    """Decompose monic-izable f as prod g_m^m with each g_m squarefree.

    Returns {multiplicity: squarefree polynomial}, omitting trivial factors.
    Valid in characteristic p via p-th-root recursion when the derivative dies.
    """
    out: dict[int, list[int]] = {}

    def merge(mult: int, poly: list[int]) -> None:
        if len(poly) <= 1:
            return
        out[mult] = _mul(out[mult], poly, p) if mult in out else poly

    def rec(g: Sequence[int], mult: int) -> None:
        g = _strip(g, p)
        if len(g) <= 1:
            return
        gp = _deriv(g, p)
        if not gp:
            rec(_pth_root(g, p), mult * p)
            return
        c = _gcd(g, gp, p)
        w = _div(g, c, p)
        i = 1
        while len(w) > 1:
            y = _gcd(w, c, p)
            z = _div(w, y, p)
            merge(mult * i, z)
            w = y
            c = _div(c, y, p)
            i += 1
        if len(c) > 1:
            rec(_pth_root(c, p), mult * p)

    rec(f, 1)
    return out


def _distinct_degree_shape(f: Sequence[int], p: int) -> dict[int, int]:
    """Return {degree d: count} of irreducible factors of a squarefree f."""
    s = _strip(f, p)
    inv = inv_mod(s[-1], p)
    s = [c * inv % p for c in s]
    shape: dict[int, int] = {}
    d = 0
    while len(s) - 1 >= 1:
        d += 1
        if 2 * d > len(s) - 1:
            shape[len(s) - 1] = shape.get(len(s) - 1, 0) + 1
            break
        xq = [0, 1]
        for _ in range(d):
            xq = _pow_mod(xq, p, s, p)
        g = _gcd(_sub(xq, [0, 1], p), s, p)
        if len(g) > 1:
            shape[d] = shape.get(d, 0) + (len(g) - 1) // d
            s = _div(s, g, p)
    return shape


@dataclass(frozen=True)
class SplittingType:
    """Multiset of (degree d, multiplicity e) over the irreducible factors.

    Parts are stored canonically: sorted by descending multiplicity, then
    descending degree, with repeats kept. The label reads like "1^2,1".
    """

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for part in self.parts:
            if len(part) != 2 or part[0] < 1 or part[1] < 1:
                raise ValueError(f"bad splitting part {part!r}")
        canon = tuple(sorted(self.parts, key=lambda de: (-de[1], -de[0])))
        object.__setattr__(self, "parts", canon)

    @property
    def degree(self) -> int:
        return sum(d * e for d, e in self.parts)

    @property
    def has_repeated_factor(self) -> bool:
        return any(e >= 2 for _, e in self.parts)

    def label(self) -> str:
        return ",".join(
            f"{d}^{e}" if e > 1 else f"{d}" for d, e in self.parts
        )

    def __str__(self) -> str:
        return "<" + self.label() + ">"


def _dehomogenize(coeffs: Sequence[int], p: int) -> tuple[int, list[int]]:
    """Split f = y^e * (rest) and return (e, rest(t, 1)) with t the x-line."""
    n = len(coeffs) - 1
    e = 0
    while e <= n and coeffs[e] % p == 0:
        e += 1
    if e > n:
        raise ValueError("the zero form has no splitting type")
    h = [coeffs[n - k] % p for k in range(n - e + 1)]
    return e, h


def splitting_type_coeffs(coeffs: Sequence[int], p: int) -> SplittingType:
    """Compute the splitting type of a nonzero form from raw coefficients."""
    e, h = _dehomogenize(coeffs, p)
    parts: list[tuple[int, int]] = []
    if e >= 1:
        parts.append((1, e))
    for mult, poly in _squarefree_decomposition(h, p).items():
        for d, cnt in _distinct_degree_shape(poly, p).items():
            parts.extend([(d, mult)] * cnt)
    return SplittingType(tuple(parts))


def splitting_type(f: BinaryForm) -> SplittingType:
    """Return the multiset of (degree, multiplicity) of irreducible factors."""
    if f.is_zero:
        raise ValueError("the zero form has no splitting type")
    return splitting_type_coeffs(f.coeffs, f.p)


def is_singular_coeffs(coeffs: Sequence[int], p: int) -> bool:
    """Decide whether a nonzero form (raw coefficients) has a repeated factor."""
    e, h = _dehomogenize(coeffs, p)
    if e >= 2:
        return True
    hp = _deriv(h, p)
    if not hp:
        # Zero derivative in characteristic p means h is a p-th power
        # (degree >= p), hence repeated; constants have no factors at all.
        return len(h) > 1
    return len(_gcd(h, hp, p)) > 1


def is_singular(f: BinaryForm) -> bool:
    """Decide whether a nonzero binary form has a repeated irreducible factor."""
    if f.is_zero:
        raise ValueError("singularity is defined for nonzero forms only")
    return is_singular_coeffs(f.coeffs, f.p)


def quadratic_symbol(q: BinaryForm) -> int:
    """Classify a nonzero binary quadratic: +1 split, 0 ramified, -1 inert.

    Equals the Legendre symbol of the discriminant when p is odd; defined via
    the splitting type so that p = 2 is covered uniformly.
    """
    if q.degree != 2:
        raise ValueError(f"expected a quadratic, got degree {q.degree}")
    st = splitting_type(q)
    if st.parts == ((1, 2),):
        sym = 0
    elif st.parts == ((1, 1), (1, 1)):
        sym = 1
    elif st.parts == ((2, 1),):
        sym = -1
    else:
        raise AssertionError(f"impossible quadratic splitting {st}")
    if q.p != 2:
        expected = legendre(disc_quadratic(q), q.p)
        if sym != expected:
            raise AssertionError(
                f"splitting symbol {sym} disagrees with discriminant symbol "
                f"{expected} for {q}"
            )
    return sym
