"""Binary forms over F_p, dual coefficient vectors, polar pairing, catalecticant
matrices, projective point enumeration, and exact linear algebra mod p."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .ff import inv_mod, require_prime

# Monomial conventions, fixed throughout:
#   degree-n form   v = sum_i c_i x^(n-i) y^i          with coeffs (c_0, ..., c_n)
#   degree-n dual   w = sum_i a_i (x^(n-i) y^i)^*      with coeffs (a_0, ..., a_n)
# The dual basis pairs (x^(n-i) y^i)^* against x^(n-j) y^j as the Kronecker delta.


def _reduced(coeffs: Sequence[int], p: int) -> tuple[int, ...]:
    return tuple(int(c) % p for c in coeffs)


@dataclass(frozen=True)
class BinaryForm:
    """A binary form of fixed degree with coefficients in F_p."""

    p: int
    degree: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        require_prime(self.p)
        if self.degree < 0:
            raise ValueError(f"degree must be nonnegative, got {self.degree}")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError(
                f"degree {self.degree} needs {self.degree + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", _reduced(self.coeffs, self.p))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __str__(self) -> str:
        return render_form(self.coeffs)


@dataclass(frozen=True)
class DualForm:
    """A vector in the dual space V_n^*, i.e. coefficients of dual monomials."""

    p: int
    degree: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        require_prime(self.p)
        if self.degree < 0:
            raise ValueError(f"degree must be nonnegative, got {self.degree}")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError(
                f"degree {self.degree} needs {self.degree + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", _reduced(self.coeffs, self.p))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coeffs) + ")*"


def render_form(coeffs: Sequence[int]) -> str:
    """Render coefficients (c_0..c_n) as a readable polynomial in x and y."""
    n = len(coeffs) - 1
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        xe, ye = n - i, i
        mono = ""
        if xe > 0:
            mono += "x" if xe == 1 else f"x^{xe}"
        if ye > 0:
            mono += "y" if ye == 1 else f"y^{ye}"
        if mono == "":
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


def convolve(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Multiply two coefficient sequences mod p (polynomial product)."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def multiply(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Multiply two binary forms over the same field."""
    if f.p != g.p:
        raise ValueError(f"modulus mismatch: {f.p} vs {g.p}")
    return BinaryForm(f.p, f.degree + g.degree, tuple(convolve(f.coeffs, g.coeffs, f.p)))


def pair(w: DualForm, v: BinaryForm) -> DualForm:
    """Contract a degree-n dual vector against a degree-m form (m <= n).

    The result u in V_(n-m)^* is defined by u(v2) = w(v * v2); in coordinates
    u_j = sum_i v_i a_(i+j).
    """
    if w.p != v.p:
        raise ValueError(f"modulus mismatch: {w.p} vs {v.p}")
    n, m = w.degree, v.degree
    if m > n:
        raise ValueError(f"cannot pair degree-{n} dual against degree-{m} form")
    a, c = w.coeffs, v.coeffs
    out = tuple(sum(c[i] * a[i + j] for i in range(m + 1)) % w.p for j in range(n - m + 1))
    return DualForm(w.p, n - m, out)


def substitute(f: BinaryForm, m: Sequence[Sequence[int]]) -> BinaryForm:
    """Apply the coordinate change x -> m00*x + m01*y, y -> m10*x + m11*y."""
    p = f.p
    a, b = int(m[0][0]) % p, int(m[0][1]) % p
    c, d = int(m[1][0]) % p, int(m[1][1]) % p
    if (a * d - b * c) % p == 0:
        raise ValueError("substitution matrix is singular")
    n = f.degree
    # Powers of the two substituted linear forms, as coefficient lists.
    xpow: list[list[int]] = [[1]]
    ypow: list[list[int]] = [[1]]
    for _ in range(n):
        xpow.append(convolve(xpow[-1], [a, b], p))
        ypow.append(convolve(ypow[-1], [c, d], p))
    out = [0] * (n + 1)
    for i, ci in enumerate(f.coeffs):
        if ci == 0:
            continue
        term = convolve(xpow[n - i], ypow[i], p) if 0 < i < n else (
            xpow[n] if i == 0 else ypow[n]
        )
        for k, t in enumerate(term):
            out[k] = (out[k] + ci * t) % p
    return BinaryForm(p, n, tuple(out))


def dual_substitute(w: DualForm, m: Sequence[Sequence[int]]) -> DualForm:
    """Pull back a dual vector along a coordinate change: (g.w)(v) = w(v o g)."""
    p = w.p
    n = w.degree
    cols = []
    for j in range(n + 1):
        mono = BinaryForm(p, n, tuple(1 if i == j else 0 for i in range(n + 1)))
        cols.append(substitute(mono, m).coeffs)
    out = tuple(
        sum(w.coeffs[k] * cols[j][k] for k in range(n + 1)) % p for j in range(n + 1)
    )
    return DualForm(p, n, out)


def projective_rep(f: BinaryForm) -> BinaryForm:
    """Scale a nonzero form so its first nonzero coefficient is 1."""
    if f.is_zero:
        raise ValueError("the zero form has no projective representative")
    lead = next(c for c in f.coeffs if c != 0)
    if lead == 1:
        return f
    s = inv_mod(lead, f.p)
    return BinaryForm(f.p, f.degree, tuple(c * s % f.p for c in f.coeffs))


def projective_rep_coeffs(coeffs: Sequence[int], p: int) -> tuple[int, ...]:
    """Scale a nonzero coefficient tuple so its first nonzero entry is 1."""
    red = _reduced(coeffs, p)
    lead = next((c for c in red if c != 0), 0)
    if lead == 0:
        raise ValueError("the zero vector has no projective representative")
    if lead == 1:
        return red
    s = inv_mod(lead, p)
    return tuple(c * s % p for c in red)


def projective_points(n: int, p: int) -> tuple[BinaryForm, ...]:
    """Enumerate P(V_n^*) representatives in ascending lex order of coefficients.

    Each class is represented by the tuple whose first nonzero entry is 1;
    ascending lex order puts y^n first and x^n + ... last. The count is
    (p^(n+1) - 1) / (p - 1).
    """
    require_prime(p)
    out = []
    for k in range(n, -1, -1):
        head = (0,) * k + (1,)
        for tail in itertools.product(range(p), repeat=n - k):
            out.append(BinaryForm(p, n, head + tail))
    return tuple(out)


@lru_cache(maxsize=64)
def projective_coeff_array(n: int, p: int) -> np.ndarray:
    """Return P(V_n^*) representatives as an integer array, same order as
    projective_points, without constructing form objects (for bulk sweeps)."""
    require_prime(p)
    blocks = []
    for k in range(n, -1, -1):
        t = n - k
        count = p**t
        block = np.zeros((count, n + 1), dtype=np.int64)
        block[:, k] = 1
        idx = np.arange(count, dtype=np.int64)
        for col in range(t):
            block[:, k + 1 + col] = (idx // p ** (t - 1 - col)) % p
        blocks.append(block)
    return np.concatenate(blocks, axis=0)


def disc_quadratic(q: BinaryForm) -> int:
    """Return the discriminant c_1^2 - 4 c_0 c_2 of a binary quadratic, mod p."""
    if q.degree != 2:
        raise ValueError(f"expected a quadratic, got degree {q.degree}")
    c0, c1, c2 = q.coeffs
    return (c1 * c1 - 4 * c0 * c2) % q.p


@dataclass(frozen=True)
class Matrix:
    """A rectangular matrix over F_p with reduced integer entries."""

    p: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        require_prime(self.p)
        if not self.rows:
            raise ValueError("matrix needs at least one row")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise ValueError("matrix rows must have equal length")
        if width == 0:
            raise ValueError("matrix needs at least one column")
        object.__setattr__(
            self, "rows", tuple(_reduced(r, self.p) for r in self.rows)
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])


def catalecticant_matrix(w: DualForm, s: int, t: int, r: int) -> Matrix:
    """Build the (t+1) x (s+1) catalecticant slice with entry (i, j) = a_(r+i+j).

    It is the matrix of the contraction V_s -> V_(n-s)^* restricted to the
    window selected by r; apolarity conditions are its kernel equations.
    """
    if s < 0 or t < 0 or r < 0:
        raise ValueError("catalecticant indices must be nonnegative")
    if r + s + t > w.degree:
        raise ValueError(
            f"window r+s+t = {r + s + t} exceeds dual degree {w.degree}"
        )
    a = w.coeffs
    return Matrix(w.p, tuple(
        tuple(a[r + i + j] for j in range(s + 1)) for i in range(t + 1)
    ))


def _rref_rows(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] % p != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = inv_mod(m[r][c], p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] % p != 0:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rref(mat: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Return the reduced row echelon form of a matrix and its pivot columns."""
    m, pivots = _rref_rows([list(r) for r in mat.rows], mat.p)
    return Matrix(mat.p, tuple(tuple(r) for r in m)), tuple(pivots)


def rank_and_kernel(mat: Matrix) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Return the rank and a canonical reduced-echelon basis of the kernel."""
    p = mat.p
    m, pivots = _rref_rows([list(r) for r in mat.rows], p)
    rank = len(pivots)
    free = [c for c in range(mat.ncols) if c not in pivots]
    if not free:
        return rank, ()
    basis = []
    for fc in free:
        v = [0] * mat.ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-m[i][fc]) % p
        basis.append(v)
    echelon, kpiv = _rref_rows(basis, p)
    if len(kpiv) != len(basis):
        raise AssertionError("kernel basis unexpectedly dependent")
    return rank, tuple(tuple(r) for r in echelon)


def mat_vec(mat: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    """Multiply a matrix by a column vector over F_p."""
    if len(v) != mat.ncols:
        raise ValueError(f"vector length {len(v)} != {mat.ncols} columns")
    return tuple(sum(r[j] * v[j] for j in range(mat.ncols)) % mat.p for r in mat.rows)
