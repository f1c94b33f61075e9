"""A rectangle tiling and a resistor network are the same linear system.

Vertical cut segments become terminals, tiles become resistors whose
resistance is the tile's width/height ratio, and a battery spans the outer
sides.  Solving the tiling and solving the circuit then literally agree:
each tile's height is its resistor's current, the big rectangle's height is
the battery current, and the width/height ratio is the total resistance.
"""

from fractions import Fraction

from tilecircuit import (
    Dissection,
    FieldSpec,
    Tile,
    certify_equivalence,
    circuit_of_dissection,
    format_netlist,
)

# a pinwheel: central unit square ringed by four rectangles
field = FieldSpec.rational()
pinwheel = Dissection(
    field,
    [
        Tile(1, (0.0, 1.0, 2.0, 2.0), Fraction(1)),
        Tile(2, (2.0, 1.0, 1.0, 1.0), Fraction(1)),
        Tile(3, (3.0, 0.0, 2.0, 2.0), Fraction(1)),
        Tile(4, (2.0, 2.0, 3.0, 1.0), Fraction(3)),
        Tile(5, (0.0, 0.0, 3.0, 1.0), Fraction(3)),
    ],
)

print("the pinwheel's network:")
print(format_netlist(circuit_of_dissection(pinwheel)))

report = certify_equivalence(pinwheel)
print("tile height == resistor current, tile by tile:")
for entry in report.tiles:
    mark = "==" if entry.matches else "!="
    print(f"  tile {entry.tile}: {entry.vertical_side} {mark} {entry.current}")
print("battery current:", report.battery_current,
      "== big height:", report.big_vertical)
print("total resistance:", report.resistance, "== width/height:", report.big_ratio)
print("the two linear systems accept each other's solutions:",
      report.systems_agree)
print()
print("everything agrees exactly:", report.ok)
