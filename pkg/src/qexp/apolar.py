"""Apolarity for binary quintic dual vectors: apolar spaces, catalecticant
rank, the degree-3 covariant, Waring-type classification, and the two
complete-intersection generators of the apolar ideal."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .factor import SplittingType, splitting_type
from .forms import (
    BinaryForm,
    DualForm,
    Matrix,
    catalecticant_matrix,
    multiply,
    rank_and_kernel,
)


def apolar_space(w: DualForm, m: int) -> tuple[BinaryForm, ...]:
    """Return the reduced-echelon basis of (w^perp)_m = ker A_(m, n-m; 0)."""
    n = w.degree
    if not 0 <= m <= n:
        raise ValueError(f"apolar degree {m} out of range 0..{n}")
    _, kernel = rank_and_kernel(catalecticant_matrix(w, m, n - m, 0))
    return tuple(BinaryForm(w.p, m, v) for v in kernel)


def catalecticant_rank(w: DualForm) -> int:
    """Return the rank of the middle catalecticant slice A_(s, n-s; 0)."""
    n = w.degree
    s = (n + 1) // 2
    rank, _ = rank_and_kernel(catalecticant_matrix(w, s, n - s, 0))
    return rank


def minimal_generator(w: DualForm) -> BinaryForm:
    """Return the unique lowest-degree apolar form of a nonzero dual vector.

    Its degree equals the catalecticant rank s; the kernel there is one
    dimensional and the kernel one degree below is zero.
    """
    if w.is_zero:
        raise ValueError("the zero dual vector has no minimal apolar generator")
    s = catalecticant_rank(w)
    basis = apolar_space(w, s)
    if len(basis) != 1:
        raise AssertionError(
            f"apolar kernel at degree {s} has dimension {len(basis)}, expected 1"
        )
    if s >= 1 and apolar_space(w, s - 1):
        raise AssertionError(
            f"apolar kernel below the catalecticant rank {s} is nonzero"
        )
    return basis[0]


def cat_covariant(w: DualForm) -> BinaryForm:
    """Return det(A_(m,m;1) x - A_(m,m;0) y) for odd degree n = 2m + 1.

    The determinant of the pencil of middle catalecticant slices is a form of
    degree m + 1 that is always apolar to w; for quintics it is the cubic
    whose splitting type classifies rank-3 vectors.
    """
    n = w.degree
    if n % 2 == 0:
        raise ValueError(f"catalecticant covariant needs odd degree, got {n}")
    m = (n - 1) // 2
    a = w.coeffs
    p = w.p
    total = [0] * (m + 2)
    for perm in itertools.permutations(range(m + 1)):
        sign = _perm_sign(perm)
        prod = [1]
        for i in range(m + 1):
            j = perm[i]
            # Entry (i, j) of the pencil is the linear form a_(1+i+j) x - a_(i+j) y.
            lin = [a[1 + i + j], (-a[i + j]) % p]
            prod = _mul_ascending_xdeg(prod, lin, p)
        for k, c in enumerate(prod):
            total[k] = (total[k] + sign * c) % p
    return BinaryForm(p, m + 1, tuple(total))


def _perm_sign(perm: tuple[int, ...]) -> int:
    s = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                s = -s
    return s


def _mul_ascending_xdeg(a: list[int], b: list[int], p: int) -> list[int]:
    # Convolution in the y-index convention used by BinaryForm coefficients.
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


@dataclass(frozen=True)
class WaringType:
    """Catalecticant rank together with the splitting type that refines it."""

    rank: int
    splitting: SplittingType

    def __post_init__(self) -> None:
        if not 0 <= self.rank <= 3:
            raise ValueError(f"quintic catalecticant rank must be 0..3, got {self.rank}")
        if self.rank == 0 and self.splitting.parts:
            raise ValueError("rank 0 carries an empty splitting type")

    def label(self) -> str:
        return "0" if self.rank == 0 else self.splitting.label()

    def __str__(self) -> str:
        if self.rank == 0:
            return "zero"
        return f"rank {self.rank}, type <{self.splitting.label()}>"


def waring_type(w: DualForm) -> WaringType:
    """Classify a quintic dual vector by rank and refining splitting type.

    Rank <= 2 vectors are refined by the splitting type of the minimal apolar
    generator; rank-3 vectors by the splitting type of the degree-3 covariant,
    which is cross-checked to span the one-dimensional apolar space in degree 3.
    """
    if w.degree != 5:
        raise ValueError(f"Waring classification implemented for quintics, got degree {w.degree}")
    if w.is_zero:
        return WaringType(0, SplittingType(()))
    s = catalecticant_rank(w)
    if s <= 2:
        return WaringType(s, splitting_type(minimal_generator(w)))
    cov = cat_covariant(w)
    if cov.is_zero:
        raise AssertionError(f"rank-3 vector {w.coeffs} has zero covariant")
    gen = minimal_generator(w)
    if not _proportional(cov.coeffs, gen.coeffs, w.p):
        raise AssertionError(
            f"covariant {cov.coeffs} is not proportional to the degree-3 "
            f"apolar generator {gen.coeffs}"
        )
    return WaringType(3, splitting_type(cov))


def _proportional(a: tuple[int, ...], b: tuple[int, ...], p: int) -> bool:
    return all(
        (a[i] * b[j] - a[j] * b[i]) % p == 0
        for i in range(len(a))
        for j in range(i + 1, len(a))
    )


def _degree6_basis(p: int) -> tuple[BinaryForm, ...]:
    return tuple(
        BinaryForm(p, 6, tuple(1 if i == j else 0 for i in range(7)))
        for j in range(7)
    )


def ci_generators(w: DualForm) -> tuple[BinaryForm, BinaryForm]:
    """Return the complete-intersection generators of the apolar ideal.

    For a nonzero quintic dual vector of catalecticant rank s, the apolar
    ideal is generated in degrees s and 7 - s. The first generator is the
    minimal one; the second is the first reduced-echelon basis vector of the
    apolar space in degree 7 - s that lies outside the multiples of the first.
    In degree 6 the apolar space is all of V_6^* and the monomial basis is used.
    """
    if w.degree != 5:
        raise ValueError(f"expected a quintic dual vector, got degree {w.degree}")
    if w.is_zero:
        raise ValueError("the zero dual vector has no complete intersection")
    s = catalecticant_rank(w)
    first = minimal_generator(w)
    m2 = 7 - s
    if m2 <= 5:
        big = apolar_space(w, m2)
    else:
        big = _degree6_basis(w.p)
    shift_count = 7 - 2 * s + 1
    multiples = []
    for k in range(shift_count):
        mono = BinaryForm(
            w.p, 7 - 2 * s, tuple(1 if i == k else 0 for i in range(shift_count))
        )
        multiples.append(multiply(first, mono).coeffs)
    if len(big) != len(multiples) + 1:
        raise AssertionError(
            f"apolar space in degree {m2} has dimension {len(big)}, expected "
            f"{len(multiples) + 1} for a complete intersection in degrees "
            f"({s}, {m2})"
        )
    base_rank, _ = rank_and_kernel(Matrix(w.p, tuple(multiples)))
    if base_rank != len(multiples):
        raise AssertionError("multiples of the minimal generator are dependent")
    for cand in big:
        stacked = Matrix(w.p, tuple(multiples) + (cand.coeffs,))
        r, _ = rank_and_kernel(stacked)
        if r == base_rank + 1:
            return first, cand
    raise AssertionError(
        f"no echelon basis vector of degree {m2} lies outside the multiples "
        f"of the degree-{s} generator"
    )


def perp_space(f: BinaryForm, m: int) -> tuple[DualForm, ...]:
    """Return the reduced-echelon basis of (perp f)_m for m >= deg f.

    The conditions are u(x^(m-n-j) y^j f) = 0 for j = 0..m-n, so the basis is
    the kernel of the matrix whose rows are the shifted coefficient vectors of
    f; its dimension is exactly deg f.
    """
    if f.is_zero:
        raise ValueError("the zero form has no annihilator space")
    n = f.degree
    if m < n:
        raise ValueError(f"need m >= deg f = {n}, got {m}")
    rows = []
    for j in range(m - n + 1):
        row = [0] * (m + 1)
        for k, c in enumerate(f.coeffs):
            row[j + k] = c
        rows.append(tuple(row))
    _, kernel = rank_and_kernel(Matrix(f.p, tuple(rows)))
    basis = tuple(DualForm(f.p, m, v) for v in kernel)
    if len(basis) != n:
        raise AssertionError(
            f"annihilator of a degree-{n} form in degree {m} has dimension "
            f"{len(basis)}, expected {n}"
        )
    return basis
