"""Brute-force verification route: enumerate the singular locus, histogram
residues of the pairing over singular vectors, push forward the three
square-decomposition morphisms, and scan for the conjectured decay bound.

Everything here is independent of the closed-form dispatch in quintic.py,
sharing only the definitions (forms, factorization shapes, pairing)."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import log
from typing import Sequence

import numpy as np

from .apolar import apolar_space, cat_covariant, catalecticant_rank
from .factor import is_singular, is_singular_coeffs, splitting_type_coeffs
from .forms import (
    BinaryForm,
    DualForm,
    convolve,
    projective_coeff_array,
    projective_points,
    projective_rep_coeffs,
)

DEFAULT_BUDGET = 10**9


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration would exceed the point budget."""

    def __init__(self, estimate: int, budget: int, what: str):
        super().__init__(
            f"{what} needs about {estimate} points, over the budget {budget}"
        )
        self.estimate = estimate
        self.budget = budget


def _check_budget(estimate: int, budget: int | None, what: str) -> None:
    limit = DEFAULT_BUDGET if budget is None else budget
    if estimate > limit:
        raise BudgetExceededError(estimate, limit, what)


@lru_cache(maxsize=16)
def _locus_array(n: int, p: int) -> np.ndarray:
    """Coefficient rows of the projective singular locus, in enumeration order."""
    reps = projective_coeff_array(n, p)
    masks = []
    # Chunked so the row-list conversion never holds millions of rows at once.
    for start in range(0, len(reps), 200_000):
        rows = reps[start : start + 200_000].tolist()
        masks.append(
            np.fromiter(
                (is_singular_coeffs(row, p) for row in rows),
                dtype=bool,
                count=len(rows),
            )
        )
    return reps[np.concatenate(masks)] if masks else reps


def singular_locus(n: int, p: int, budget: int | None = None) -> tuple[BinaryForm, ...]:
    """Return canonical representatives of all degree-n forms with a repeated
    factor, in the projective enumeration order; cached per (n, p)."""
    if n < 2:
        raise ValueError(f"forms of degree {n} have no repeated factors")
    _check_budget(p ** (n + 1), budget, f"singular locus of degree {n} at p = {p}")
    return tuple(
        BinaryForm(p, n, tuple(int(c) for c in row)) for row in _locus_array(n, p)
    )


def n_w(w: DualForm, budget: int | None = None) -> int:
    """Count projective singular [v] of degree n with (w, v) = 0."""
    n = w.degree
    _check_budget(w.p ** (n + 1), budget, f"singular sweep of degree {n} at p = {w.p}")
    locus = _locus_array(n, w.p)
    res = locus @ np.array(w.coeffs, dtype=np.int64) % w.p
    return int((res == 0).sum())


@dataclass(frozen=True)
class ResidueProfile:
    """Histogram of <w, v> mod p over all affine singular v, including v = 0."""

    p: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.p:
            raise ValueError(f"profile needs {self.p} buckets, got {len(self.counts)}")


@dataclass(frozen=True)
class OracleValue:
    """Brute-force evaluation S = p^(n+1) * phi(w) with its supporting data."""

    p: int
    value: int
    singular_count: int
    profile: ResidueProfile


def exp_sum_oracle(w: DualForm, budget: int | None = None) -> OracleValue:
    """Evaluate S by brute force and cross-check two independent routes.

    Route (a) contracts the character sum: S = 1 + p * n_w - n_0, with n_0 the
    number of projective singular classes. Route (b) builds the full residue
    histogram over affine singular vectors (including 0) and takes
    S = M_0 - M_1, after checking the nonzero buckets all agree. A mismatch
    between the routes or a lopsided profile raises."""
    n = w.degree
    p = w.p
    _check_budget(p ** (n + 1), budget, f"brute-force sum of degree {n} at p = {p}")
    locus = _locus_array(n, p)
    n0 = len(locus)
    if n == 5:
        expected_n0 = p**4 + 2 * p**3 + p**2 + p + 1
        if n0 != expected_n0:
            raise AssertionError(
                f"singular quintic count {n0} != p^4+2p^3+p^2+p+1 = {expected_n0}"
            )
    res = locus @ np.array(w.coeffs, dtype=np.int64) % p
    zeros = int((res == 0).sum())

    counts = np.zeros(p, dtype=np.int64)
    counts[0] = 1  # the zero vector contributes residue 0
    for lam in range(1, p):
        counts += np.bincount(lam * res % p, minlength=p)
    nonzero_buckets = set(counts[1:].tolist())
    if len(nonzero_buckets) > 1:
        raise AssertionError(
            f"nonzero residue buckets differ for w = {w.coeffs} mod {p}: "
            f"{counts.tolist()}"
        )
    histogram_value = int(counts[0] - counts[1])
    contracted_value = 1 + p * zeros - n0
    if histogram_value != contracted_value:
        raise AssertionError(
            f"histogram route {histogram_value} != contracted route "
            f"{contracted_value} for w = {w.coeffs} mod {p}"
        )
    return OracleValue(
        p=p,
        value=histogram_value,
        singular_count=zeros,
        profile=ResidueProfile(p, tuple(int(c) for c in counts)),
    )


@dataclass(frozen=True)
class FiberCounts:
    """Fiber sizes of the three square-decomposition morphisms over one [v].

    line_cubic counts pairs ([l], [c]) with l^2 c = v; line_pair_line counts
    triples ([l1], [l2], [l]) with l1^2 l2^2 l = v, the pair ordered; and
    quadric_line counts pairs ([q], [l]) with q^2 l = v."""

    line_cubic: int
    line_pair_line: int
    quadric_line: int


@lru_cache(maxsize=16)
def _fiber_maps(p: int) -> tuple[dict, dict, dict]:
    lines = [f.coeffs for f in projective_points(1, p)]
    cubics = [f.coeffs for f in projective_points(3, p)]
    quads = [f.coeffs for f in projective_points(2, p)]
    squares = [tuple(convolve(l, l, p)) for l in lines]

    psi_lc: Counter = Counter()
    for sq in squares:
        for c in cubics:
            psi_lc[projective_rep_coeffs(convolve(sq, c, p), p)] += 1

    psi_lpl: Counter = Counter()
    for sq1 in squares:
        for sq2 in squares:
            prod = convolve(sq1, sq2, p)
            for l in lines:
                psi_lpl[projective_rep_coeffs(convolve(prod, l, p), p)] += 1

    psi_ql: Counter = Counter()
    for q in quads:
        qq = convolve(q, q, p)
        for l in lines:
            psi_ql[projective_rep_coeffs(convolve(qq, l, p), p)] += 1

    return dict(psi_lc), dict(psi_lpl), dict(psi_ql)


def fiber_counts(v: BinaryForm) -> FiberCounts:
    """Count preimages of [v] under the three square-decomposition morphisms."""
    if v.degree != 5:
        raise ValueError(f"expected a quintic form, got degree {v.degree}")
    if v.is_zero:
        raise ValueError("fibers are defined over projective classes only")
    key = projective_rep_coeffs(v.coeffs, v.p)
    lc, lpl, ql = _fiber_maps(v.p)
    return FiberCounts(lc.get(key, 0), lpl.get(key, 0), ql.get(key, 0))


@dataclass(frozen=True)
class FiberSums:
    """Totals of the three fiber counts over P((w^perp)_5), with the derived
    decomposition counts and the singular-locus count they reproduce."""

    line_cubic_total: int
    line_pair_line_total: int
    quadric_line_total: int
    square_lines: int
    square_quadrics: int
    square_line_pairs: int
    singular_count: int


def fiber_sums_over_apolar(w: DualForm, budget: int | None = None) -> FiberSums:
    """Sum the three fiber counts over the projective apolar quintics of w.

    For nonzero w the totals satisfy
        S_lc  = (p+1)(p^2+p+1) + p^3 * N_lines,
        S_ql  = (p^2+p+1)      + p   * N_quadrics,
        S_lpl = (p+1)^2        + p   * N_pairs,
    and inclusion-exclusion S_lc - S_lpl + S_ql equals the number of singular
    members, which is checked against the singular-locus count."""
    if w.degree != 5:
        raise ValueError(f"expected a quintic dual vector, got degree {w.degree}")
    if w.is_zero:
        raise ValueError("fiber totals need a nonzero dual vector")
    p = w.p
    _check_budget(p**5, budget, f"fiber sweep at p = {p}")
    basis = apolar_space(w, 5)
    if len(basis) != 5:
        raise AssertionError(
            f"apolar quintics of a nonzero vector must form a hyperplane, got "
            f"dimension {len(basis)}"
        )
    lc, lpl, ql = _fiber_maps(p)
    bmat = np.array([b.coeffs for b in basis], dtype=np.int64)
    coords = projective_coeff_array(4, p)
    members = coords @ bmat % p
    s_lc = s_lpl = s_ql = 0
    for row in members.tolist():
        key = projective_rep_coeffs(row, p)
        s_lc += lc.get(key, 0)
        s_lpl += lpl.get(key, 0)
        s_ql += ql.get(key, 0)

    def peel(total: int, base: int, scale: int, name: str) -> int:
        diff = total - base
        if diff % scale != 0 or diff < 0:
            raise AssertionError(
                f"{name} total {total} is not {base} + {scale} * k"
            )
        return diff // scale

    n_lines = peel(s_lc, (p + 1) * (p**2 + p + 1), p**3, "line-cubic")
    n_quadrics = peel(s_ql, p**2 + p + 1, p, "quadric-line")
    n_pairs = peel(s_lpl, (p + 1) ** 2, p, "line-pair-line")
    singular_members = s_lc - s_lpl + s_ql
    if singular_members != n_w(w, budget):
        raise AssertionError(
            f"inclusion-exclusion {singular_members} != singular-locus count "
            f"{n_w(w, budget)} for w = {w.coeffs} mod {p}"
        )
    return FiberSums(
        line_cubic_total=s_lc,
        line_pair_line_total=s_lpl,
        quadric_line_total=s_ql,
        square_lines=n_lines,
        square_quadrics=n_quadrics,
        square_line_pairs=n_pairs,
        singular_count=singular_members,
    )


@dataclass(frozen=True)
class ScanReport:
    """Summary of a decay scan over degree-n dual vectors at one prime."""

    degree: int
    p: int
    scope: str
    considered: int
    generic_count: int
    max_abs_value: int | None
    max_abs_phi: Fraction | None
    observed_exponent: float | None
    claimed_exponent: float
    theorem_bound_ok: bool | None


def _is_generic(w: DualForm) -> bool:
    n = w.degree
    if n % 2 == 0:
        return catalecticant_rank(w) == n // 2 + 1
    cov = cat_covariant(w)
    return not cov.is_zero and not is_singular(cov)


def conjecture_scan(
    n: int,
    p: int,
    count: int | None = None,
    seed: int = 0,
    budget: int | None = None,
) -> ScanReport:
    """Measure max |phi| over generic degree-n dual vectors at the prime p.

    Genericity means an invertible middle catalecticant for even n, and a
    nonzero squarefree catalecticant covariant for odd n. The claimed decay is
    |phi| = O(p^(-(n+3)/2)); the report also rechecks, for n = 5, that
    |S| <= 4 p^2 whenever the covariant is nonzero."""
    if n < 2:
        raise ValueError(f"scan needs degree >= 2, got {n}")
    _check_budget(p ** (n + 1), budget, f"decay scan of degree {n} at p = {p}")
    space = p ** (n + 1)
    exhaustive_cap = 10**6
    if space <= exhaustive_cap:
        scope = "exhaustive"
        vectors = _all_vectors(n, p)
        considered = space
    else:
        scope = "sample"
        considered = 10000 if count is None else count
        rng = random.Random(seed)
        vectors = (
            tuple(rng.randrange(p) for _ in range(n + 1)) for _ in range(considered)
        )

    locus = _locus_array(n, p)
    n0 = len(locus)
    generic_count = 0
    max_abs = None
    max_abs_covnz = 0 if n == 5 else None
    for coeffs in vectors:
        w = DualForm(p, n, coeffs)
        res = locus @ np.array(coeffs, dtype=np.int64) % p
        s = 1 + p * int((res == 0).sum()) - n0
        if n == 5 and not cat_covariant(w).is_zero:
            max_abs_covnz = max(max_abs_covnz, abs(s))
        if _is_generic(w):
            generic_count += 1
            max_abs = abs(s) if max_abs is None else max(max_abs, abs(s))
    claimed = -(n + 3) / 2
    if max_abs is None:
        phi = None
        observed = None
    else:
        phi = Fraction(max_abs, space)
        observed = (log(max_abs) / log(p) - (n + 1)) if max_abs > 0 else float("-inf")
    bound_ok = None if n != 5 else (max_abs_covnz <= 4 * p**2)
    return ScanReport(
        degree=n,
        p=p,
        scope=scope,
        considered=considered,
        generic_count=generic_count,
        max_abs_value=max_abs,
        max_abs_phi=phi,
        observed_exponent=observed,
        claimed_exponent=claimed,
        theorem_bound_ok=bound_ok,
    )


def _all_vectors(n: int, p: int):
    total = p ** (n + 1)
    for idx in range(total):
        coeffs = []
        rem = idx
        for _ in range(n + 1):
            coeffs.append(rem % p)
            rem //= p
        yield tuple(reversed(coeffs))
