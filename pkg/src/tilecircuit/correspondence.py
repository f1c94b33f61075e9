"""The bridge between dissections and resistor networks.

Every vertical cut segment of a dissection becomes a terminal, every tile a
resistor (resistance = aspect ratio, oriented from its left terminal to its
right one), and a battery joins the outer sides with voltage equal to the
big rectangle's horizontal side.  Under this dictionary the junction
conditions and the Kirchhoff equations are the same system: tile vertical
sides are edge currents and the big vertical side is the battery current.
``certify_equivalence`` checks all of that exactly on a concrete dissection.

The same bridge powers two algebraic constructions for square dissections
into rectangles of ratio R and 1/R:

  * ``theorem1_certificate`` stretches the square horizontally by R, reads
    the resulting network with tiles of stretched ratio R^2 as a symbolic
    resistor t (ratio-1 tiles as resistance 1), and turns the network's
    resistance formula p(t)/q(t) into a nonzero integer polynomial
    q(x^2)*x - p(x^2) that provably vanishes at R.
  * ``ladder_dissection`` constructs, from positive rationals c_1..c_n whose
    ladder continued fraction in R equals 1, an explicit unit-square tiling
    by ratio-R and ratio-1/R rectangles (a slab of fitting grid tiles plus a
    transposed remainder, recursively).

Ladder file format (JSON)::

    {"field": {...}, "R": scalar, "c": [rational, ...]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .algcheck import IntPoly
from .circuit import (
    Battery,
    Netlist,
    Resistor,
    kirchhoff_system,
    solve_flow,
    symbolic_resistance,
)
from .dissection import (
    CutStructure,
    Dissection,
    Tile,
    extract_cuts,
    solve_sizes,
    validate_geometric,
)
from .fields import (
    FieldSpec,
    QuadExt,
    RatFunc,
    format_scalar,
    one_like,
    parse_rational,
    zero_like,
)
from .linear import Unique, substitute_and_verify


class CorrespondenceError(Exception):
    """A bridge construction received unusable input."""


def _node_names(cs: CutStructure) -> dict[int, str]:
    names = {cs.left_boundary: "L", cs.right_boundary: "R"}
    counter = 1
    for node in cs.v_nodes:
        if node.nid not in names:
            names[node.nid] = f"n{counter}"
            counter += 1
    return names


def circuit_of_dissection(d: Dissection, cuts: CutStructure | None = None) -> Netlist:
    """Build the network of a dissection (sizing it first if needed).

    Terminals are the vertical cut segments; tile k becomes resistor k with
    resistance equal to its aspect ratio, oriented left terminal to right
    terminal; the battery spans the outer sides with voltage equal to the
    big horizontal side, positive pole on the left.
    """
    if d.big_w is None:
        d = solve_sizes(d).sized
    cs = cuts if cuts is not None else extract_cuts(d)
    names = _node_names(cs)
    resistors = [
        Resistor(
            t.tid,
            names[cs.tile_ends[t.tid][0]],
            names[cs.tile_ends[t.tid][1]],
            t.aspect,
        )
        for t in d.tiles
    ]
    battery = Battery("L", "R", d.big_w)
    return Netlist(resistors, battery)


@dataclass(frozen=True)
class TileCurrent:
    tile: int
    vertical_side: object
    current: object

    @property
    def matches(self) -> bool:
        return self.vertical_side == self.current


@dataclass(frozen=True)
class EquivalenceReport:
    tiles: tuple[TileCurrent, ...]
    battery_current: object
    big_vertical: object
    resistance: object
    big_ratio: object
    systems_agree: bool

    @property
    def ok(self) -> bool:
        return (
            all(t.matches for t in self.tiles)
            and self.battery_current == self.big_vertical
            and self.resistance == self.big_ratio
            and self.systems_agree
        )

    def mismatches(self) -> tuple[str, ...]:
        out = []
        for t in self.tiles:
            if not t.matches:
                out.append(
                    f"tile {t.tile}: side {format_scalar(t.vertical_side)} "
                    f"!= current {format_scalar(t.current)}"
                )
        if self.battery_current != self.big_vertical:
            out.append(
                f"battery current {format_scalar(self.battery_current)} != "
                f"big vertical side {format_scalar(self.big_vertical)}"
            )
        if self.resistance != self.big_ratio:
            out.append(
                f"resistance {format_scalar(self.resistance)} != "
                f"big ratio {format_scalar(self.big_ratio)}"
            )
        if not self.systems_agree:
            out.append("junction and Kirchhoff systems disagree on a solution")
        return tuple(out)


def certify_equivalence(d: Dissection) -> EquivalenceReport:
    """Check, exactly, that sizing the tiles and solving the flow coincide."""
    sizing = solve_sizes(d)
    net = circuit_of_dissection(sizing.sized, sizing.cuts)
    flow = solve_flow(net)

    vertical = sizing.sized.big_h
    tiles = tuple(
        TileCurrent(t.tid, t.rect[3], flow.edge_current[t.tid])
        for t in sizing.sized.tiles
    )

    # each solver's answer must satisfy the other solver's equations
    ksys = kirchhoff_system(net)
    as_flow = {f"I{t.tid}": t.rect[3] for t in sizing.sized.tiles}
    as_flow["I"] = vertical
    as_sides = {f"v{t.tid}": flow.edge_current[t.tid] for t in sizing.sized.tiles}
    as_sides["x"] = net.battery.voltage
    agree = substitute_and_verify(ksys, Unique(as_flow)) and substitute_and_verify(
        sizing.system, Unique(as_sides)
    )

    return EquivalenceReport(
        tiles,
        flow.battery_current,
        vertical,
        flow.total_resistance,
        sizing.ratio,
        agree,
    )


def stretch(d: Dissection, s) -> Dissection:
    """Scale the horizontal direction by s > 0: every aspect multiplies by s."""
    if not s > zero_like(s):
        raise CorrespondenceError("stretch factor must be positive")
    field = d.field
    if isinstance(s, QuadExt) and field.kind == "rational":
        field = FieldSpec.quadratic(s.d)
    fs = float(s)
    tiles = tuple(
        Tile(
            t.tid,
            (t.sketch[0] * fs, t.sketch[1], t.sketch[2] * fs, t.sketch[3]),
            t.aspect * s,
            (t.rect[0] * s, t.rect[1], t.rect[2] * s, t.rect[3]) if t.rect else None,
        )
        for t in d.tiles
    )
    big_w = d.big_w * s if d.big_w is not None else None
    return Dissection(field, tiles, big_w=big_w, big_h=d.big_h)


def theorem1_certificate(d: Dissection, ratio=None) -> IntPoly:
    """Integer polynomial with the dissection's tile ratio R as a root.

    The dissection must tile a square with rectangles of aspect R or 1/R.
    Stretching by R makes the 1/R tiles squares (resistance 1) and the R
    tiles rectangles of ratio R^2 (the symbolic resistance t); if the
    resulting network resistance is p(t)/q(t), then q(x^2)*x - p(x^2) is a
    nonzero integer polynomial vanishing at R, which is verified exactly
    before returning.
    """
    sizing = solve_sizes(d)
    if sizing.ratio != one_like(sizing.ratio):
        raise CorrespondenceError("certificate needs a square dissection")
    r = ratio if ratio is not None else infer_ratio(d)
    if not r > zero_like(r):
        raise CorrespondenceError("ratio must be positive")
    inv = one_like(r) / r

    cs = sizing.cuts
    names = _node_names(cs)
    resistors = []
    for t in d.tiles:
        if t.aspect == inv:
            value = RatFunc.constant(1)
        elif t.aspect == r:
            value = RatFunc.t()
        else:
            raise CorrespondenceError(
                f"tile {t.tid} has aspect {format_scalar(t.aspect)}, "
                "not the declared ratio or its inverse"
            )
        resistors.append(
            Resistor(
                t.tid,
                names[cs.tile_ends[t.tid][0]],
                names[cs.tile_ends[t.tid][1]],
                value,
            )
        )
    net = Netlist(resistors, Battery("L", "R", RatFunc.constant(1)))
    w = symbolic_resistance(net)

    candidate = w.den.compose_square().shift_up(1) - w.num.compose_square()
    ints, _ = candidate.clear_denominators()
    certificate = IntPoly(ints)
    if certificate.is_zero:
        raise CorrespondenceError("resistance formula produced the zero polynomial")
    if certificate.eval(r) != zero_like(r):
        raise CorrespondenceError(
            "internal contradiction: certificate does not vanish at the ratio"
        )
    return certificate


def infer_ratio(d: Dissection):
    """The representative >= 1 of the tile aspect set {R, 1/R}."""
    aspects = []
    for t in d.tiles:
        if not any(t.aspect == a for a in aspects):
            aspects.append(t.aspect)
    candidates = []
    one = one_like(aspects[0])
    for a in aspects:
        r = a if a >= one else one / a
        if not any(r == c for c in candidates):
            candidates.append(r)
    if len(candidates) != 1:
        raise CorrespondenceError(
            "tile aspects are not of the form {R, 1/R} for a single ratio"
        )
    return candidates[0]


# --- ladder continued fractions and their dissections -----------------------


class LadderError(Exception):
    """A ladder specification is malformed or does not evaluate to 1."""


@dataclass(frozen=True)
class LadderSpec:
    """Target ratio R plus positive rational coefficients c_1..c_n."""

    field: FieldSpec
    ratio: object
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if not coeffs:
            raise LadderError("ladder needs at least one coefficient")
        if any(c <= 0 for c in coeffs):
            raise LadderError("ladder coefficients must be positive rationals")
        if not self.ratio > self.field.zero:
            raise LadderError("ladder ratio must be positive")


def ladder_tails(spec: LadderSpec) -> list:
    """Partial tails T_k = c_k R + 1/T_{k+1}, innermost first computed."""
    r = spec.ratio
    tails: list = []
    nxt = None
    for c in reversed(spec.coefficients):
        term = c * r
        if nxt is None:
            tails.append(term)
        else:
            if nxt == zero_like(nxt):
                raise ZeroDivisionError("ladder tail vanishes")
            tails.append(term + one_like(term) / nxt)
        nxt = tails[-1]
    tails.reverse()
    return tails


def cf_eval(spec: LadderSpec):
    """Exact value of c_1 R + 1/(c_2 R + 1/(... + 1/(c_n R))).

    The ladder witnesses a tiling exactly when this value is 1.
    """
    return ladder_tails(spec)[0]


def ladder_dissection(spec: LadderSpec) -> Dissection:
    """Unit-square tiling by ratio-R and ratio-1/R rectangles from a ladder.

    Working inward, coefficient c_k = p/q claims a slab of the current
    rectangle and fills it with a q-by-p grid of correctly oriented tiles;
    the remainder has aspect 1/T_{k+1} and is processed with orientations
    transposed.  Validity of the ladder (all tails positive, value exactly
    1) guarantees the construction closes up exactly.
    """
    tails = ladder_tails(spec)
    one = one_like(spec.ratio)
    zero = zero_like(spec.ratio)
    for t in tails:
        if not t > zero:
            raise LadderError("ladder tails must be positive")
    if tails[0] != one:
        raise LadderError(
            f"ladder evaluates to {format_scalar(tails[0])}, not 1"
        )

    r = spec.ratio
    tiles: list[Tile] = []

    def emit(x, y, w, h, aspect):
        tid = len(tiles) + 1
        tiles.append(
            Tile(
                tid,
                (float(x), float(y), float(w), float(h)),
                aspect,
                (x, y, w, h),
            )
        )

    def fill(x, y, w, h, k: int, transposed: bool):
        c = spec.coefficients[k]
        p, q = c.numerator, c.denominator
        if not transposed:
            # vertical slab on the left: q rows by p columns of ratio-R tiles
            slab_w = c * r * h
            cell_w = slab_w / p
            cell_h = h / q
            for col in range(p):
                for row in range(q):
                    emit(x + cell_w * col, y + cell_h * row, cell_w, cell_h, r)
            rest_w = w - slab_w
            if k + 1 < len(spec.coefficients):
                fill(x + slab_w, y, rest_w, h, k + 1, True)
            elif rest_w != zero:
                raise LadderError("ladder does not close up exactly")
        else:
            # horizontal slab at the bottom: p rows by q columns of 1/R tiles
            slab_h = c * r * w
            cell_w = w / q
            cell_h = slab_h / p
            for col in range(q):
                for row in range(p):
                    emit(x + cell_w * col, y + cell_h * row, cell_w, cell_h, one / r)
            rest_h = h - slab_h
            if k + 1 < len(spec.coefficients):
                fill(x, y + slab_h, w, rest_h, k + 1, False)
            elif rest_h != zero:
                raise LadderError("ladder does not close up exactly")

    fill(zero, zero, one, one, 0, False)
    d = Dissection(spec.field, tiles, big_w=one, big_h=one)
    report = validate_geometric(d)
    if not report.ok:
        raise LadderError(
            "ladder construction failed validation: " + "; ".join(report.issues)
        )
    return d


def ladder_to_json(spec: LadderSpec) -> dict:
    return {
        "field": spec.field.to_json(),
        "R": format_scalar(spec.ratio),
        "c": [format_scalar(c) for c in spec.coefficients],
    }


def ladder_from_json(obj: dict) -> LadderSpec:
    try:
        field = FieldSpec.from_json(obj["field"])
        ratio = field.parse(obj["R"])
        coeffs = tuple(parse_rational(c) for c in obj["c"])
    except (KeyError, TypeError) as exc:
        raise LadderError(f"malformed ladder object: {exc}") from exc
    return LadderSpec(field, ratio, coeffs)


def load_ladder(text: str) -> LadderSpec:
    return ladder_from_json(json.loads(text))
