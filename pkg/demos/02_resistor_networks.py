"""Exact resistor-network solving.

Series and parallel pairs, a bridge that reduces to neither, a network
with a symbolic resistor solved over Q(t), and the splice-a-subnetwork
operation that leaves the rest of the circuit untouched.
"""

from fractions import Fraction

from tilecircuit import (
    Battery,
    Netlist,
    RatFunc,
    Resistor,
    parallel,
    replace_resistor_with_network,
    resistance,
    series,
    solve_flow,
    symbolic_resistance,
)

# --- series and parallel ----------------------------------------------------

r1, r2 = Fraction(3, 4), Fraction(5, 2)
chain = Netlist(
    [Resistor(1, "a", "m", r1), Resistor(2, "m", "b", r2)],
    Battery("a", "b", Fraction(1)),
)
print("series  :", resistance(chain), "= r1 + r2 =", series(r1, r2))

pair = Netlist(
    [Resistor(1, "a", "b", r1), Resistor(2, "a", "b", r2)],
    Battery("a", "b", Fraction(1)),
)
print("parallel:", resistance(pair), "= r1 r2/(r1 + r2) =", parallel(r1, r2))

# --- a balanced bridge ------------------------------------------------------

# four unit arms plus a unit cross-piece: the cross-piece carries nothing
bridge = Netlist(
    [
        Resistor(1, "left", "top", Fraction(1)),
        Resistor(2, "top", "bottom", Fraction(1)),
        Resistor(3, "bottom", "right", Fraction(1)),
        Resistor(4, "top", "right", Fraction(1)),
        Resistor(5, "left", "bottom", Fraction(1)),
    ],
    Battery("left", "right", Fraction(1)),
)
flow = solve_flow(bridge)
print()
print("bridge resistance:", flow.total_resistance)
print("current through the cross-piece:", flow.edge_current[2])
print("node potentials:", {n: str(p) for n, p in sorted(flow.potential.items())})

# --- symbolic resistance over Q(t) -------------------------------------------

t = RatFunc.t()
one = RatFunc.constant(1)
symbolic = Netlist(
    [
        Resistor(1, "a", "m", one),
        Resistor(2, "m", "b", t),
        Resistor(3, "a", "b", t),
    ],
    Battery("a", "b", one),
)
formula = symbolic_resistance(symbolic)
print()
print("resistance as a function of t:", formula)
for t0 in (Fraction(1), Fraction(2), Fraction(7, 3)):
    print(f"  at t = {t0}: {formula.eval(t0)}")

# --- replacing a resistor by an equivalent network ---------------------------

# swap the 5/2 resistor for two 5/4 resistors in series; nothing else moves
inner = Netlist(
    [Resistor(1, "p", "q", Fraction(5, 4)), Resistor(2, "q", "r", Fraction(5, 4))],
    Battery("p", "r", Fraction(1)),
)
merged = replace_resistor_with_network(chain, 2, inner)
print()
print("after splicing:", resistance(merged), "(unchanged)")
print("current through resistor 1:",
      solve_flow(merged).edge_current[1], "==", solve_flow(chain).edge_current[1])
