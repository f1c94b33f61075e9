"""Which aspect ratios let similar rectangles tile a square?

A unit square cut into five rectangles, each of ratio R = (3 + sqrt 3)/2 or
its reciprocal, pins R as a root of 2x^2 - 6x + 3.  Three capabilities
around that phenomenon:

  * an integer polynomial vanishing at the ratio of any such tiling,
    produced from the tiling's resistor network with a symbolic resistor;
  * the exact test for which candidate ratios are even possible: every
    algebraic conjugate must have positive real part (so 1 + sqrt 2, whose
    conjugate 1 - sqrt 2 is negative, can never work);
  * an explicit tiling built from a ladder continued fraction equal to 1.
"""

from fractions import Fraction

from tilecircuit import (
    Dissection,
    FieldSpec,
    LadderSpec,
    QuadExt,
    Tile,
    cf_eval,
    dump_dissection,
    ladder_dissection,
    lfs_condition3,
    minpoly_quadratic,
    solve_sizes,
    theorem1_certificate,
    validate_geometric,
)

field = FieldSpec.quadratic(3)
R = QuadExt(Fraction(3, 2), Fraction(1, 2), 3)  # (3 + sqrt 3)/2
print("R =", R, " and  R - R^2/3 =", R - R * R / 3, "(forces 2R^2 - 6R + 3 = 0)")

# --- the five-rectangle tiling of the unit square ----------------------------

low = 0.789  # sketch height of the upright bottom rectangles
five = Dissection(
    field,
    [
        Tile(1, (0.0, 0.0, 1 / 3, low), 1 / R),
        Tile(2, (1 / 3, 0.0, 1 / 3, low), 1 / R),
        Tile(3, (2 / 3, 0.0, 1 / 3, low), 1 / R),
        Tile(4, (0.0, low, 0.5, 1 - low), R),
        Tile(5, (0.5, low, 0.5, 1 - low), R),
    ],
    big_w=field.one,
    big_h=field.one,
)
sized = solve_sizes(five)
print()
print("five-rectangle tiling solves to a", sized.ratio, ": 1 square")
for t in sized.sized.tiles:
    print(f"  tile {t.tid}: {t.rect[2]} x {t.rect[3]}")

certificate = theorem1_certificate(five, R)
print()
print("integer certificate F(x) =", certificate)
print("F(R) =", certificate.eval(R))

# --- which ratios are possible at all ----------------------------------------

print()
for candidate in (R, QuadExt(1, 1, 2), QuadExt(0, 1, 2), Fraction(7, 5)):
    verdict = lfs_condition3(candidate)
    mp = minpoly_quadratic(candidate)
    word = "PASS" if verdict.passed else "FAIL"
    print(f"  {str(candidate):>16}  minimal poly {str(mp):>14}  ->  {word}")

# --- an explicit witness from a ladder continued fraction --------------------

spec = LadderSpec(field, R, (Fraction(1, 3), Fraction(2)))
print()
print("ladder value c1 R + 1/(c2 R) =", cf_eval(spec), "(must be 1)")
witness = ladder_dissection(spec)
print("constructed", len(witness.tiles), "tiles;",
      "validates:", validate_geometric(witness).ok,
      "; re-solved ratio:", solve_sizes(witness).ratio)

with open("ladder_square.json", "w", encoding="utf-8") as fh:
    fh.write(dump_dissection(witness))
print("wrote ladder_square.json")
