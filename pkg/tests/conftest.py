"""Shared fixture corpus and independent oracles for the test suite."""

import random
from fractions import Fraction

import pytest

from tilecircuit import (
    Battery,
    Dissection,
    FieldSpec,
    Netlist,
    QuadExt,
    Resistor,
    Tile,
)

# Unique exact solution of the nine-square shelf (vertical side normalized
# to 1): big horizontal side 33/32 and square sides k/32 for
# k = 1, 10, 9, 8, 7, 4, 18, 14, 15.  Pinned by three independent checks:
# hand elimination of the junction system, the area identity
# sum(sides^2) = 33/32, and the classic 32x33 squared rectangle.
SHELF_X = Fraction(33, 32)
SHELF_SIDES = {
    1: Fraction(1, 32),
    2: Fraction(5, 16),
    3: Fraction(9, 32),
    4: Fraction(1, 4),
    5: Fraction(7, 32),
    6: Fraction(1, 8),
    7: Fraction(9, 16),
    8: Fraction(7, 16),
    9: Fraction(15, 32),
}

_SHELF_SKETCH = {
    1: (8, 22, 1, 1),
    2: (9, 22, 10, 10),
    3: (0, 23, 9, 9),
    4: (0, 15, 8, 8),
    5: (8, 15, 7, 7),
    6: (15, 18, 4, 4),
    7: (15, 0, 18, 18),
    8: (19, 18, 14, 14),
    9: (0, 0, 15, 15),
}


def make_shelf() -> Dissection:
    """The nine-square shelf, squares numbered as in the solved table."""
    field = FieldSpec.rational()
    tiles = [
        Tile(tid, tuple(float(c) for c in sketch), Fraction(1))
        for tid, sketch in sorted(_SHELF_SKETCH.items())
    ]
    return Dissection(field, tiles)


def make_two_columns(r1, r2) -> Dissection:
    """Two tiles side by side (one vertical cut); ratio comes out r1 + r2."""
    field = FieldSpec.rational()
    tiles = [
        Tile(1, (0.0, 0.0, 1.0, 1.0), Fraction(r1)),
        Tile(2, (1.0, 0.0, 1.0, 1.0), Fraction(r2)),
    ]
    return Dissection(field, tiles)


def make_two_rows(r1, r2) -> Dissection:
    """Two stacked tiles (one horizontal cut); ratio r1*r2/(r1 + r2)."""
    field = FieldSpec.rational()
    tiles = [
        Tile(1, (0.0, 0.5, 1.0, 0.5), Fraction(r1)),
        Tile(2, (0.0, 0.0, 1.0, 0.5), Fraction(r2)),
    ]
    return Dissection(field, tiles)


def make_pinwheel() -> Dissection:
    """Central unit square ringed by four rectangles; ratios 1,1,1,3,3.

    Hand elimination gives big ratio 5/3 with vertical sides
    (2/3, 1/3, 2/3, 1/3, 1/3).
    """
    field = FieldSpec.rational()
    tiles = [
        Tile(1, (0.0, 1.0, 2.0, 2.0), Fraction(1)),
        Tile(2, (2.0, 1.0, 1.0, 1.0), Fraction(1)),
        Tile(3, (3.0, 0.0, 2.0, 2.0), Fraction(1)),
        Tile(4, (2.0, 2.0, 3.0, 1.0), Fraction(3)),
        Tile(5, (0.0, 0.0, 3.0, 1.0), Fraction(3)),
    ]
    return Dissection(field, tiles)


PINWHEEL_RATIO = Fraction(5, 3)
PINWHEEL_SIDES = {
    1: Fraction(2, 3),
    2: Fraction(1, 3),
    3: Fraction(2, 3),
    4: Fraction(1, 3),
    5: Fraction(1, 3),
}


def golden_ratio_like() -> QuadExt:
    """(3 + sqrt(3))/2, the ratio of the five-rectangle square tiling."""
    return QuadExt(Fraction(3, 2), Fraction(1, 2), 3)


def make_five_similar() -> Dissection:
    """Unit square cut into five rectangles of ratio R and 1/R, R=(3+sqrt3)/2.

    Three upright thirds across the bottom (ratio 1/R) under two halves
    lying across the top (ratio R); widths 1/3 and 1/2 are forced.
    """
    field = FieldSpec.quadratic(3)
    r = golden_ratio_like()
    inv = 1 / r
    lo_h = 0.789  # sketch approximation of R/3
    tiles = [
        Tile(1, (0.0, 0.0, 1 / 3, lo_h), inv),
        Tile(2, (1 / 3, 0.0, 1 / 3, lo_h), inv),
        Tile(3, (2 / 3, 0.0, 1 / 3, lo_h), inv),
        Tile(4, (0.0, lo_h, 0.5, 1 - lo_h), r),
        Tile(5, (0.5, lo_h, 0.5, 1 - lo_h), r),
    ]
    return Dissection(field, tiles, big_w=field.one, big_h=field.one)


def corpus():
    """Every sizable fixture the cross-checking suites run over."""
    return {
        "shelf": make_shelf(),
        "two_columns": make_two_columns(Fraction(1, 2), Fraction(3, 2)),
        "two_rows": make_two_rows(Fraction(1), Fraction(2)),
        "pinwheel": make_pinwheel(),
        "five_similar": make_five_similar(),
    }


def random_fraction(rng: random.Random, lo: int = 1, hi: int = 9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(lo, hi))


def random_connected_netlist(rng: random.Random, max_nodes: int = 8,
                             max_edges: int = 16) -> Netlist:
    """Random connected multigraph with positive rational resistances.

    A resistor spanning tree guarantees connectivity without the battery,
    so every battery placement leaves a closed circuit.
    """
    n = rng.randint(2, max_nodes)
    nodes = [f"n{i}" for i in range(n)]
    resistors = []
    for i in range(1, n):
        j = rng.randrange(i)
        resistors.append(Resistor(i, nodes[j], nodes[i], random_fraction(rng)))
    extra = rng.randint(0, max_edges - (n - 1))
    rid = n
    for _ in range(extra):
        a, b = rng.sample(range(n), 2)
        resistors.append(Resistor(rid, nodes[a], nodes[b], random_fraction(rng)))
        rid += 1
    plus, minus = rng.sample(nodes, 2)
    return Netlist(resistors, Battery(plus, minus, random_fraction(rng)))


def determinant(matrix):
    """Exact determinant by cofactor expansion; oracle-grade, n <= 6 or so."""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = Fraction(0)
    sign = 1
    for col in range(n):
        entry = matrix[0][col]
        if entry != 0:
            minor = [
                [row[c] for c in range(n) if c != col] for row in matrix[1:]
            ]
            total += sign * entry * determinant(minor)
        sign = -sign
    return total


def cramer_solve(coeff_rows, rhs):
    """Cramer's rule with the exact determinant; None when singular."""
    n = len(coeff_rows)
    det = determinant(coeff_rows)
    if det == 0:
        return None
    out = []
    for j in range(n):
        replaced = [
            [rhs[i] if c == j else coeff_rows[i][c] for c in range(n)]
            for i in range(n)
        ]
        out.append(determinant(replaced) / det)
    return out


@pytest.fixture
def rng():
    return random.Random(20260811)
