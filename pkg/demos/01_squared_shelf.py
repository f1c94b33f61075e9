"""Sizing a shelf cut into nine unequal squares.

A bookshelf whose compartments are all perfect squares: given only a rough
sketch of which square touches which, exact arithmetic recovers every side
length and the shelf's width-to-height ratio.  No floats are involved in
the solve; the sketch numbers below only encode adjacency.
"""

from fractions import Fraction

from tilecircuit import (
    Dissection,
    FieldSpec,
    Tile,
    dehn_check,
    render_svg,
    solve_sizes,
)

# sketch coordinates (x, y, w, h): drawn on a 33 x 32 grid, y upward
SKETCH = {
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

shelf = Dissection(
    FieldSpec.rational(),
    [
        Tile(tid, tuple(float(c) for c in sketch), Fraction(1))  # squares: ratio 1
        for tid, sketch in sorted(SKETCH.items())
    ],
)

result = solve_sizes(shelf)
print("big rectangle: width x height =", result.sized.big_w, "x", result.sized.big_h)
print("width/height  =", result.ratio)
print("height/width  =", 1 / result.ratio)
print()
print("square sides (exact):")
for tile in result.sized.tiles:
    print(f"  square {tile.tid}: {tile.rect[3]}")

# Nine *pairwise different* squares tile this rectangle, and the ratio of
# its sides indeed came out rational; confirm both via the checker.
report = dehn_check(result.sized)
print()
print("all tiles square:", report.all_squares)
print("ratio rational: ", report.ratio_is_rational, "->", report.ratio)

with open("shelf.svg", "w", encoding="utf-8") as fh:
    fh.write(render_svg(result.sized))
print()
print("wrote shelf.svg")
