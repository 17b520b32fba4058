"""Bundled reference dataset: worked examples and tables with their stated
values. The CLI recomputes every entry from scratch and reports agreement or
disagreement; the stated values are recorded verbatim, including entries the
recomputation contradicts, so discrepancies stay visible."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class WorkedExample:
    """A quintic dual vector with its stated classification and C value.

    stated_label carries the stated normalization, which includes an extra
    factor of p relative to the C invariant (e.g. label "-3p" alongside
    C = -3); stated_quadrics are the stated apolar square quadrics as
    canonical projective coefficient triples."""

    p: int
    coeffs: tuple[int, int, int, int, int, int]
    stated_type: str
    stated_label: str
    stated_c: int
    stated_quadrics: tuple[tuple[int, int, int], ...]


# Normalized vectors (a0, a1, a2, 0, 0, 0) with a2 != 0: type <1^3>.
TRIPLE_LINE_EXAMPLES: tuple[WorkedExample, ...] = (
    WorkedExample(7, (0, 0, 0, 1, 1, 5), "1^3", "0", 0, ((0, 0, 1), (1, 3, 4))),
    WorkedExample(7, (0, 0, 0, 1, 1, 0), "1^3", "-p", -1, ((0, 0, 1), (1, 3, 3))),
    WorkedExample(7, (0, 0, 0, 1, 1, 1), "1^3", "p", 1, ((0, 0, 1), (1, 3, 6))),
)

# Normalized vectors (a0, a1, 0, 0, 0, b) with a1 * b != 0: type <1^2,1>.
DOUBLE_SINGLE_EXAMPLES: tuple[WorkedExample, ...] = (
    WorkedExample(
        19, (18, 0, 0, 0, 1, 2), "1^2,1", "-3p", -3,
        ((0, 1, 0), (1, 18, 1), (1, 18, 18)),
    ),
    WorkedExample(
        7, (6, 0, 0, 0, 1, 3), "1^2,1", "-2p", -2,
        ((0, 1, 0), (1, 2, 6), (1, 2, 1)),
    ),
    WorkedExample(
        7, (6, 0, 0, 0, 1, 0), "1^2,1", "-p", -1,
        ((0, 1, 0), (1, 0, 6), (1, 0, 1)),
    ),
    WorkedExample(
        11, (10, 0, 0, 0, 1, 4), "1^2,1", "0", 0,
        ((0, 1, 0), (1, 9, 10), (1, 9, 1)),
    ),
    WorkedExample(
        7, (6, 0, 0, 0, 1, 1), "1^2,1", "p", 1,
        ((0, 1, 0), (1, 3, 6), (1, 3, 1)),
    ),
)


@dataclass(frozen=True)
class FamilyGridRow:
    """One prime row of the three-parameter family grid: the stated Legendre
    symbols of the four sign-variant discriminants and the stated C value."""

    p: int
    stated_symbols: tuple[int, int, int, int]
    stated_c: int


@dataclass(frozen=True)
class FamilyBlock:
    """A parameter triple with its stated integer discriminants and grid rows."""

    alpha: int
    beta: int
    gamma: int
    stated_discs: tuple[int, int, int, int]
    rows: tuple[FamilyGridRow, ...]


FAMILY_TABLE: tuple[FamilyBlock, ...] = (
    FamilyBlock(
        1, 2, 3, (-8, 28, 20, 12),
        (
            FamilyGridRow(337, (1, 1, 1, 1), -4),
            FamilyGridRow(47, (1, -1, 1, 1), -2),
            FamilyGridRow(113, (1, 1, -1, -1), 0),
            FamilyGridRow(7, (-1, 0, -1, 1), 1),
            FamilyGridRow(17, (1, -1, -1, -1), 2),
            FamilyGridRow(167, (-1, -1, -1, -1), 4),
        ),
    ),
    FamilyBlock(
        1, 2, 4, (-7, 41, 33, 17),
        (
            FamilyGridRow(41, (1, 0, 1, -1), -1),
            FamilyGridRow(7, (0, -1, -1, -1), 3),
        ),
    ),
    FamilyBlock(
        1, 2, 5, (-3, 57, 45, 25),
        (
            FamilyGridRow(19, (1, 0, 1, 1), -3),
        ),
    ),
)


@dataclass(frozen=True)
class Char2Example:
    """A characteristic-2 vector with its stated type, quadrics, and symbols."""

    coeffs: tuple[int, int, int, int, int, int]
    stated_type: str
    stated_quadrics: tuple[tuple[int, int, int], ...]
    stated_symbols: tuple[int, ...]


CHAR2_EXAMPLES: tuple[Char2Example, ...] = (
    Char2Example((0, 1, 1, 1, 1, 0), "1,1,1", ((1, 1, 1),), (-1,)),
    Char2Example((1, 1, 1, 0, 1, 1), "2,1", ((1, 0, 1),), (0,)),
    Char2Example((1, 0, 0, 1, 0, 1), "3", ((0, 1, 1),), (1,)),
)


# Stated decomposition-count table: type label -> (square_lines,
# square_quadrics, square_line_pairs) as polynomials in p.
def stated_summary_row(label: str, p: int) -> tuple[int, int, int]:
    """Evaluate the stated count triple for a type with fixed counts."""
    table = {
        "0": (p + 1, p * p + p + 1, (p + 1) ** 2),
        "1": (1, p + 1, 2 * p + 1),
        "1^2": (1, p + 1, 1),
        "1,1": (0, 1, 2),
        "2": (0, 1, 0),
    }
    return table[label]


SUMMARY_ROW_LABELS: tuple[str, ...] = ("0", "1", "1^2", "1,1", "2")


# Stated fiber table: splitting type of a singular quintic -> fiber sizes
# (line_cubic, line_pair_line, quadric_line); every singular type satisfies
# line_cubic - line_pair_line + quadric_line = 1.
FIBER_TABLE: tuple[tuple[str, int, int, int], ...] = (
    ("1^2,1,1,1", 1, 0, 0),
    ("1^2,2,1", 1, 0, 0),
    ("1^2,3", 1, 0, 0),
    ("1^3,1,1", 1, 0, 0),
    ("1^3,2", 1, 0, 0),
    ("1^2,1^2,1", 2, 2, 1),
    ("1^3,1^2", 2, 2, 1),
    ("2^2,1", 0, 0, 1),
    ("1^4,1", 1, 1, 1),
    ("1^5", 1, 1, 1),
)


# Stated value dispatch: possible C values by refining type.
STATED_C_SETS_ODD: dict[str, tuple[int, ...]] = {
    "1,1": (-1,),
    "2": (1,),
    "1^3": (-1, 0, 1),
    "1^2,1": (-3, -2, -1, 0, 1),
}
STATED_C_OTHER_ODD: tuple[int, ...] = (-4, -3, -2, -1, 0, 1, 2, 3, 4)
STATED_C_SETS_CHAR2: dict[str, tuple[int, ...]] = {
    "1,1": (-1,),
    "2": (1,),
    "1^3": (0,),
    "1^2,1": (-2, -1),
}
STATED_C_OTHER_CHAR2: tuple[int, ...] = (-1, 0, 1)


def stated_value_set(label: str, p: int) -> frozenset[int]:
    """Return the stated set of possible S values for a type label at p."""
    if label == "0":
        return frozenset({p**5 + p**4 - p**3})
    if label == "1":
        return frozenset({p**4 - p**3})
    if label == "1^2":
        return frozenset({p**4 + p**3})
    if p == 2:
        cs = STATED_C_SETS_CHAR2.get(label, STATED_C_OTHER_CHAR2)
    else:
        cs = STATED_C_SETS_ODD.get(label, STATED_C_OTHER_ODD)
    return frozenset(c * p * p for c in cs)
