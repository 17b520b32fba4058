"""Acceptance gate: one test per end-to-end requirement, each recording a
single PASS/FAIL line through the criterion fixture. A failing line means the
recomputation contradicts a bundled stated value; the disagreement details are
kept in the line rather than suppressed."""

import itertools
import random
import time

import numpy as np

from qexp import refdata
from qexp.apolar import (
    cat_covariant,
    catalecticant_rank,
    minimal_generator,
    perp_space,
    waring_type,
)
from qexp.factor import is_singular, quadratic_symbol, splitting_type
from qexp.ff import is_prime, legendre
from qexp.forms import (
    BinaryForm,
    DualForm,
    Matrix,
    multiply,
    pair,
    projective_points,
    rank_and_kernel,
)
from qexp.oracle import BudgetExceededError, exp_sum_oracle, fiber_counts, singular_locus
from qexp.quintic import (
    apolar_square_quadrics,
    c_value,
    example_family,
    exp_sum,
    sign_variant_discriminants,
)


def _all_duals(p):
    for coeffs in itertools.product(range(p), repeat=6):
        yield DualForm(p, 5, coeffs)


def test_criterion_01(criterion):
    """Closed form versus oracle, exhaustively at the small primes."""
    details = []
    ok = True
    for p, limit in ((2, 1.0), (3, 1.0), (5, 30.0)):
        start = time.monotonic()
        total = mismatches = 0
        for w in _all_duals(p):
            total += 1
            if exp_sum(w).value != exp_sum_oracle(w).value:
                mismatches += 1
        elapsed = time.monotonic() - start
        details.append(f"p={p}: {total} vectors, {mismatches} mismatches, {elapsed:.1f}s")
        ok = ok and mismatches == 0 and elapsed < limit
    criterion(
        1,
        "closed form matches the brute-force oracle on every vector at p = 2, 3, 5",
        ok,
        "; ".join(details),
    )


def test_criterion_02(criterion):
    """Recompute every family-table row: discriminants, symbols, C values."""
    diffs = []
    rows = 0
    for block in refdata.FAMILY_TABLE:
        params = (block.alpha, block.beta, block.gamma)
        discs = sign_variant_discriminants(*params)
        if discs != tuple(block.stated_discs):
            diffs.append(f"{params} discs {tuple(block.stated_discs)} recomputed {discs}")
        for row in block.rows:
            rows += 1
            w = example_family(*params, row.p)
            c = c_value(w)
            symbols = tuple(legendre(d, row.p) for d in discs)
            assert c == -sum(symbols)  # the recomputation is internally consistent
            if c != row.stated_c:
                diffs.append(f"{params} p={row.p} C {row.stated_c} recomputed {c}")
            if symbols != tuple(row.stated_symbols):
                diffs.append(
                    f"{params} p={row.p} symbols {tuple(row.stated_symbols)} "
                    f"recomputed {symbols}"
                )
    criterion(
        2,
        f"all {rows} stated family rows (C values and symbol grid) reproduce exactly",
        not diffs,
        "; ".join(diffs) if diffs else "9 rows, 3 discriminant quadruples",
    )


def test_criterion_03(criterion):
    """Worked examples verbatim, with brute-force confirmation of S = C p^2."""
    start = time.monotonic()
    problems = []
    label_map = {0: "0", 1: "p", -1: "-p"}
    for ex in refdata.TRIPLE_LINE_EXAMPLES + refdata.DOUBLE_SINGLE_EXAMPLES:
        w = DualForm(ex.p, 5, ex.coeffs)
        tag = f"p={ex.p} w={ex.coeffs}"
        if waring_type(w).label() != ex.stated_type:
            problems.append(f"{tag}: type")
        if c_value(w) != ex.stated_c:
            problems.append(f"{tag}: C")
        if ex.stated_label != label_map.get(ex.stated_c, f"{ex.stated_c}p"):
            problems.append(
                f"{tag}: stated label {ex.stated_label!r} is not C times p"
            )
        got = sorted(q.coeffs for q in apolar_square_quadrics(w))
        if got != sorted(tuple(t) for t in ex.stated_quadrics):
            problems.append(f"{tag}: quadric list differs")
        if exp_sum_oracle(w).value != ex.stated_c * ex.p**2:
            problems.append(f"{tag}: oracle disagrees with C p^2")
    elapsed = time.monotonic() - start
    ok = not problems and elapsed < 60.0
    detail = f"8 examples, {len(problems)} problems, {elapsed:.0f}s"
    if problems:
        detail += ": " + "; ".join(problems)
    criterion(
        3,
        "worked examples reproduce verbatim (type, C, stated labels as C*p, "
        "quadric lists) and the oracle confirms S = C p^2 up to p = 19",
        ok,
        detail,
    )


def test_criterion_04(criterion):
    """The full table of 64 vectors over F_2, plus the three cubic examples."""
    by_label = {}
    for w in _all_duals(2):
        v = exp_sum(w)
        by_label.setdefault(v.waring.label(), set()).add(v.value)
    problems = []
    for label, values in sorted(by_label.items()):
        stated = refdata.stated_value_set(label, 2)
        if not values <= stated:
            problems.append(f"<{label}> observed {sorted(values)} stated {sorted(stated)}")
    for ex in refdata.CHAR2_EXAMPLES:
        w = DualForm(2, 5, ex.coeffs)
        if waring_type(w).label() != ex.stated_type:
            problems.append(f"char-2 {ex.coeffs}: type")
        quadrics = apolar_square_quadrics(w)
        if sorted(q.coeffs for q in quadrics) != sorted(tuple(t) for t in ex.stated_quadrics):
            problems.append(f"char-2 {ex.coeffs}: quadrics")
        if tuple(quadratic_symbol(q) for q in quadrics) != tuple(ex.stated_symbols):
            problems.append(f"char-2 {ex.coeffs}: symbols")
    criterion(
        4,
        "the 64 vectors over F_2 land in the stated value sets by type, and the "
        "three char-2 examples reproduce",
        not problems,
        "; ".join(problems) if problems else f"{len(by_label)} types observed",
    )


def test_criterion_05(criterion):
    """Covariant apolarity, the rank dichotomy, and generator uniqueness."""
    start = time.monotonic()
    failures = []

    def check(w):
        cov = cat_covariant(w)
        if not pair(w, cov).is_zero:
            failures.append(f"covariant not apolar at p={w.p}, {w.coeffs}")
        if cov.is_zero and catalecticant_rank(w) > 2:
            failures.append(f"zero covariant at rank 3: p={w.p}, {w.coeffs}")
        if not w.is_zero:
            try:
                gen = minimal_generator(w)
            except AssertionError as exc:
                failures.append(f"generator not unique at p={w.p}, {w.coeffs}: {exc}")
                return
            if gen.degree != catalecticant_rank(w):
                failures.append(f"generator degree at p={w.p}, {w.coeffs}")

    for p in (2, 3):
        for w in _all_duals(p):
            check(w)
    primes = [q for q in range(2, 98) if is_prime(q)]
    rng = random.Random(505)
    for _ in range(10000):
        p = rng.choice(primes)
        check(DualForm(p, 5, tuple(rng.randrange(p) for _ in range(6))))
    elapsed = time.monotonic() - start
    ok = not failures and elapsed < 10.0
    criterion(
        5,
        "the covariant is always apolar, vanishes exactly on rank <= 2, and the "
        "minimal generator is unique (exhaustive p = 2, 3 plus 10^4 random draws)",
        ok,
        f"{len(failures)} failures, {elapsed:.1f}s",
    )


def _irreducibles(p):
    out = {d: [] for d in range(1, 5)}
    for d in range(1, 5):
        for f in projective_points(d, p):
            if splitting_type(f).parts == ((d, 1),):
                out[d].append(f)
    return out


def _composite_combos(p):
    """All multisets of >= 2 distinct irreducibles with multiplicities, total degree <= 5."""
    flat = [g for d in range(1, 5) for g in _irreducibles(p)[d]]
    combos = []

    def extend(start, chosen, total):
        if len(chosen) >= 2:
            combos.append(list(chosen))
        for i in range(start, len(flat)):
            g = flat[i]
            for e in range(1, 6):
                if total + e * g.degree > 5:
                    break
                chosen.append((g, e))
                extend(i + 1, chosen, total + e * g.degree)
                chosen.pop()

    extend(0, [], 0)
    return combos


def _power(g, e):
    out = g
    for _ in range(e - 1):
        out = multiply(out, g)
    return out


def test_criterion_06(criterion):
    """Annihilator dimensions: equal to the degree, additive across factors."""
    start = time.monotonic()
    problems = []
    combo_counts = {}
    for p in (2, 3, 5):
        for degree in range(1, 6):
            for coeffs in itertools.product(range(p), repeat=degree + 1):
                if not any(coeffs):
                    continue
                f = BinaryForm(p, degree, coeffs)
                if len(perp_space(f, 5)) != degree:
                    problems.append(f"dim != deg at p={p}, {coeffs}")
        combos = _composite_combos(p)
        combo_counts[p] = len(combos)
        basis_cache = {}
        for combo in combos:
            parts = [_power(g, e) for g, e in combo]
            f = parts[0]
            for part in parts[1:]:
                f = multiply(f, part)
            bases = []
            for part in parts:
                if part.coeffs not in basis_cache:
                    basis_cache[part.coeffs] = perp_space(part, 5)
                bases.append(basis_cache[part.coeffs])
            dims = [len(b) for b in bases]
            if sum(dims) != f.degree:
                problems.append(f"dims do not add at p={p}, f={f}")
                continue
            rows = tuple(u.coeffs for basis in bases for u in basis)
            rank, _ = rank_and_kernel(Matrix(p, rows))
            if rank != f.degree:
                problems.append(f"not a direct sum at p={p}, f={f}")
            whole = tuple(u.coeffs for u in perp_space(f, 5))
            rank_all, _ = rank_and_kernel(Matrix(p, whole + rows))
            if rank_all != f.degree:
                problems.append(f"part annihilators escape perp(f) at p={p}, f={f}")
            for i in range(len(bases)):
                for j in range(i + 1, len(bases)):
                    rows_ij = tuple(u.coeffs for u in bases[i] + bases[j])
                    r, _ = rank_and_kernel(Matrix(p, rows_ij))
                    if r != dims[i] + dims[j]:
                        problems.append(f"overlapping annihilators at p={p}, f={f}")
    elapsed = time.monotonic() - start
    ok = not problems and elapsed < 30.0
    counts = ", ".join(f"p={p}: {combo_counts[p]} composites" for p in (2, 3, 5))
    criterion(
        6,
        "annihilator dimension equals degree for every nonzero form, and the "
        "annihilators of coprime prime-power factors sum directly (p = 2, 3, 5)",
        ok,
        f"{counts}; {elapsed:.1f}s",
    )


def test_criterion_07(criterion):
    """Fiber sizes of the three squaring morphisms over every quintic."""
    start = time.monotonic()
    table = {row[0]: (row[1], row[2], row[3]) for row in refdata.FIBER_TABLE}
    problems = []
    seen = set()
    for p in (2, 3, 5):
        for v in projective_points(5, p):
            fc = fiber_counts(v)
            triple = (fc.line_cubic, fc.line_pair_line, fc.quadric_line)
            singular = is_singular(v)
            alternating = fc.line_cubic - fc.line_pair_line + fc.quadric_line
            if alternating != (1 if singular else 0):
                problems.append(f"alternating sum at p={p}, {v.coeffs}")
            if singular:
                label = splitting_type(v).label()
                seen.add(label)
                if table.get(label) != triple:
                    problems.append(f"<{label}> fibers {triple} at p={p}")
            elif triple != (0, 0, 0):
                problems.append(f"nonsingular fibers at p={p}, {v.coeffs}")
    elapsed = time.monotonic() - start
    ok = not problems and elapsed < 120.0
    criterion(
        7,
        "fiber counts over every projective quintic match the 10-row table and "
        "their alternating sum detects singularity (p = 2, 3, 5)",
        ok,
        f"{len(seen)}/10 singular types observed; {elapsed:.1f}s",
    )


def _bulk_s_values(p, vecs):
    """Brute-force S for a block of vectors via the contraction formula."""
    locus = np.array([f.coeffs for f in singular_locus(5, p)], dtype=np.int64)
    res = vecs @ locus.T % p
    return 1 + p * (res == 0).sum(axis=1) - len(locus)


def test_criterion_08(criterion):
    """The quadratic bound on generic vectors, and attainment of its range."""
    start = time.monotonic()
    problems = []
    checked = {}
    for p, sample in ((3, None), (5, None), (7, 100000)):
        if sample is None:
            vecs = np.array(list(itertools.product(range(p), repeat=6)), dtype=np.int64)
        else:
            rng = random.Random(808)
            vecs = np.array(
                [[rng.randrange(p) for _ in range(6)] for _ in range(sample)],
                dtype=np.int64,
            )
        generic = 0
        for chunk_start in range(0, len(vecs), 4000):
            chunk = vecs[chunk_start : chunk_start + 4000]
            s_vals = _bulk_s_values(p, chunk)
            for coeffs, s in zip(chunk.tolist(), s_vals.tolist()):
                w = DualForm(p, 5, tuple(coeffs))
                if not cat_covariant(w).is_zero:
                    generic += 1
                    if abs(int(s)) > 4 * p * p:
                        problems.append(f"|S| > 4p^2 at p={p}, {tuple(coeffs)}: S={s}")
        checked[p] = generic
    witnesses = {}
    primes = [q for q in range(3, 338) if is_prime(q)]
    for params in ((1, 2, 3), (1, 2, 4), (1, 2, 5)):
        for q in primes:
            if any(x % q == 0 for x in params):
                continue
            try:
                c = c_value(example_family(*params, q))
            except ValueError:
                continue
            witnesses.setdefault(c, (params, q))
    missing = sorted(set(range(-4, 5)) - set(witnesses))
    if missing:
        problems.append(
            f"C values {missing} are never attained by the three bundled "
            f"parameter triples at any prime up to 337"
        )
    elapsed = time.monotonic() - start
    counts = ", ".join(f"p={p}: {n}" for p, n in checked.items())
    criterion(
        8,
        "|S| <= 4 p^2 whenever the covariant is nonzero (exhaustive p = 3, 5; "
        "10^5 samples at p = 7) and every C in -4..4 has a family witness with "
        "p <= 337",
        not problems,
        f"nonzero-covariant vectors checked: {counts}; attained "
        f"{sorted(witnesses)}; {elapsed:.0f}s" + ("; " + "; ".join(problems) if problems else ""),
    )


def test_criterion_09(criterion):
    """Large p: enumeration refused, closed form instant."""
    start = time.monotonic()
    p = 337
    w = example_family(1, 2, 3, p)
    problems = []
    try:
        exp_sum_oracle(w)
        problems.append("enumeration at p = 337 was not refused")
    except BudgetExceededError as exc:
        if exc.estimate != p**6:
            problems.append(f"refusal estimate {exc.estimate} != p^6")
    value = exp_sum(w)
    if value.value != -4 * p * p:
        problems.append(f"closed form S = {value.value} != -4 p^2")
    if value.waring.label() != "1,1,1":
        problems.append(f"unexpected type {value.waring.label()}")
    elapsed = time.monotonic() - start
    ok = not problems and elapsed < 60.0
    criterion(
        9,
        "at p = 337 brute-force enumeration is refused while the closed form "
        "evaluates the family witness exactly",
        ok,
        f"S = {value.value}, type <{value.waring.label()}>, {elapsed:.2f}s",
    )
