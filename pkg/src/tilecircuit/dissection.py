"""Axis-aligned rectangle dissections: modeling, sizing, checking, drawing.

A dissection is described twice over.  Decimal *sketch* rectangles define
the combinatorics only: which tiles meet along which cuts, read off the
drawing up to a relative tolerance of 1e-6.  Exact sizes are never taken
from the sketch; they are recomputed by solving the junction conditions --
along every vertical cut the vertical sides meeting from the left balance
those from the right, along every horizontal cut the horizontal sides from
above balance those from below -- with the big rectangle's vertical side
normalized and each tile's horizontal side expressed through its aspect
ratio.  The solved dissection carries exact coordinates and can be
validated, tested for the all-squares/rational-ratio property, or rendered.

Dissection file format (JSON)::

    {"field": {"kind": "rational"} | {"kind": "quadratic", "d": 3},
     "big": {"w": scalar-or-null, "h": scalar-or-null},
     "tiles": [{"id": 1, "sketch": [x, y, w, h], "aspect": scalar,
                "rect": [x, y, w, h] | null}, ...]}

where scalars use the shared textual syntax and sketch entries are plain
JSON numbers.
"""

from __future__ import annotations

import bisect
import json
from dataclasses import dataclass

from .fields import FieldSpec, QuadExt, format_scalar
from .linear import Inconsistent, LinearSystem, Parametric, gauss_jordan

SKETCH_REL_TOL = 1e-6


class DissectionError(Exception):
    """Malformed dissection input."""


class SizingError(DissectionError):
    """The junction system does not size this combinatorics."""


@dataclass(frozen=True)
class Tile:
    tid: int
    sketch: tuple[float, float, float, float]  # x, y, w, h; combinatorics only
    aspect: object                             # horizontal/vertical ratio
    rect: tuple | None = None                  # exact (x, y, w, h) once solved


@dataclass(frozen=True)
class Dissection:
    field: FieldSpec
    tiles: tuple[Tile, ...]
    big_w: object | None = None
    big_h: object | None = None

    def __post_init__(self):
        object.__setattr__(self, "tiles", tuple(self.tiles))
        seen = set()
        zero = self.field.zero
        for t in self.tiles:
            if t.tid in seen:
                raise DissectionError(f"duplicate tile id {t.tid}")
            seen.add(t.tid)
            if not (t.sketch[2] > 0 and t.sketch[3] > 0):
                raise DissectionError(f"tile {t.tid} has a degenerate sketch")
            if not t.aspect > zero:
                raise DissectionError(f"tile {t.tid} has a nonpositive aspect ratio")

    def tile(self, tid: int) -> Tile:
        for t in self.tiles:
            if t.tid == tid:
                return t
        raise KeyError(f"no tile with id {tid}")

    @property
    def is_sized(self) -> bool:
        return (
            self.big_w is not None
            and self.big_h is not None
            and all(t.rect is not None for t in self.tiles)
        )


@dataclass(frozen=True)
class VNode:
    nid: int
    x: float
    y_lo: float
    y_hi: float
    left_tiles: tuple[int, ...]   # tiles whose right edge lies on this node
    right_tiles: tuple[int, ...]  # tiles whose left edge lies on this node


@dataclass(frozen=True)
class HCut:
    cid: int
    y: float
    x_lo: float
    x_hi: float
    above_tiles: tuple[int, ...]  # tiles whose bottom edge lies on this cut
    below_tiles: tuple[int, ...]  # tiles whose top edge lies on this cut


@dataclass(frozen=True)
class CutStructure:
    v_nodes: tuple[VNode, ...]
    h_cuts: tuple[HCut, ...]
    left_boundary: int
    right_boundary: int
    bottom_cut: int
    top_cut: int
    tile_ends: dict    # tile id -> (left node id, right node id)
    tile_spans: dict   # tile id -> (bottom cut id, top cut id)


def _cluster(values, eps: float) -> list[float]:
    """Sorted class representatives; values closer than eps share a class."""
    out: list[float] = []
    for v in sorted(values):
        if not out or v - out[-1] > eps:
            out.append(v)
    return out


def _class_of(value: float, classes: list[float], eps: float, what: str) -> int:
    i = bisect.bisect_left(classes, value)
    for j in (i - 1, i):
        if 0 <= j < len(classes) and abs(classes[j] - value) <= eps:
            return j
    raise DissectionError(f"{what} coordinate {value} matches no grid class")


def _merge_segments(intervals):
    """Merge [lo, hi] class intervals; touching intervals join one segment."""
    merged = []
    for lo, hi in sorted(intervals):
        if merged and lo <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return [(lo, hi) for lo, hi in merged]


def extract_cuts(d: Dissection) -> CutStructure:
    """Read the cut combinatorics off the sketch.

    Vertical nodes are the maximal connected vertical segments of the union
    of tile vertical edges (plus the big rectangle's sides); horizontal cuts
    are the same thing sideways.  Ordering is by coordinate, so the result
    is deterministic.
    """
    tiles = d.tiles
    if not tiles:
        raise DissectionError("dissection has no tiles")
    x0 = min(t.sketch[0] for t in tiles)
    y0 = min(t.sketch[1] for t in tiles)
    x1 = max(t.sketch[0] + t.sketch[2] for t in tiles)
    y1 = max(t.sketch[1] + t.sketch[3] for t in tiles)
    eps = SKETCH_REL_TOL * max(x1 - x0, y1 - y0)

    xs = _cluster(
        [t.sketch[0] for t in tiles] + [t.sketch[0] + t.sketch[2] for t in tiles],
        eps,
    )
    ys = _cluster(
        [t.sketch[1] for t in tiles] + [t.sketch[1] + t.sketch[3] for t in tiles],
        eps,
    )

    snapped = {}
    for t in tiles:
        ix0 = _class_of(t.sketch[0], xs, eps, f"tile {t.tid} left")
        ix1 = _class_of(t.sketch[0] + t.sketch[2], xs, eps, f"tile {t.tid} right")
        iy0 = _class_of(t.sketch[1], ys, eps, f"tile {t.tid} bottom")
        iy1 = _class_of(t.sketch[1] + t.sketch[3], ys, eps, f"tile {t.tid} top")
        if ix1 <= ix0 or iy1 <= iy0:
            raise DissectionError(f"tile {t.tid} collapses at sketch tolerance")
        snapped[t.tid] = (ix0, ix1, iy0, iy1)

    # every x-strip between consecutive classes must be covered exactly once
    for sx in range(len(xs) - 1):
        spans = sorted(
            (iy0, iy1, tid)
            for tid, (ix0, ix1, iy0, iy1) in snapped.items()
            if ix0 <= sx < ix1
        )
        cursor = 0
        for lo, hi, tid in spans:
            if lo > cursor:
                raise DissectionError(
                    f"sketch gap near x={xs[sx]:.6g}, y={ys[cursor]:.6g}"
                )
            if lo < cursor:
                raise DissectionError(f"sketch overlap at tile {tid}")
            cursor = hi
        if cursor != len(ys) - 1:
            raise DissectionError(f"sketch gap near x={xs[sx]:.6g} (top)")

    # vertical nodes: maximal segments of the union of vertical tile edges
    v_intervals: dict[int, list] = {c: [] for c in range(len(xs))}
    for tid, (ix0, ix1, iy0, iy1) in snapped.items():
        v_intervals[ix0].append((iy0, iy1))
        v_intervals[ix1].append((iy0, iy1))
    v_intervals[0].append((0, len(ys) - 1))
    v_intervals[len(xs) - 1].append((0, len(ys) - 1))

    v_nodes = []
    segment_ids: dict[int, list] = {}
    for c in range(len(xs)):
        if not v_intervals[c]:
            continue
        segment_ids[c] = []
        for lo, hi in _merge_segments(v_intervals[c]):
            segment_ids[c].append((lo, hi, len(v_nodes)))
            v_nodes.append([c, lo, hi, [], []])

    def _v_node_for(c: int, lo: int, hi: int, tid: int) -> int:
        for slo, shi, nid in segment_ids.get(c, ()):
            if slo <= lo and hi <= shi:
                return nid
        raise DissectionError(f"tile {tid} touches no vertical node at x class {c}")

    tile_ends = {}
    for tid, (ix0, ix1, iy0, iy1) in snapped.items():
        left = _v_node_for(ix0, iy0, iy1, tid)
        right = _v_node_for(ix1, iy0, iy1, tid)
        v_nodes[right][3].append(tid)  # this tile sits to the left of the node
        v_nodes[left][4].append(tid)   # and to the right of its left node
        tile_ends[tid] = (left, right)

    # horizontal cuts, the same construction sideways
    h_intervals: dict[int, list] = {c: [] for c in range(len(ys))}
    for tid, (ix0, ix1, iy0, iy1) in snapped.items():
        h_intervals[iy0].append((ix0, ix1))
        h_intervals[iy1].append((ix0, ix1))
    h_intervals[0].append((0, len(xs) - 1))
    h_intervals[len(ys) - 1].append((0, len(xs) - 1))

    h_cuts = []
    cut_ids: dict[int, list] = {}
    for c in range(len(ys)):
        if not h_intervals[c]:
            continue
        cut_ids[c] = []
        for lo, hi in _merge_segments(h_intervals[c]):
            cut_ids[c].append((lo, hi, len(h_cuts)))
            h_cuts.append([c, lo, hi, [], []])

    def _h_cut_for(c: int, lo: int, hi: int, tid: int) -> int:
        for slo, shi, cid in cut_ids.get(c, ()):
            if slo <= lo and hi <= shi:
                return cid
        raise DissectionError(f"tile {tid} touches no horizontal cut at y class {c}")

    tile_spans = {}
    for tid, (ix0, ix1, iy0, iy1) in snapped.items():
        bottom = _h_cut_for(iy0, ix0, ix1, tid)
        top = _h_cut_for(iy1, ix0, ix1, tid)
        h_cuts[bottom][3].append(tid)  # tile is above its bottom cut
        h_cuts[top][4].append(tid)     # and below its top cut
        tile_spans[tid] = (bottom, top)

    def _single_segment(ids, what: str) -> int:
        if len(ids) != 1:
            raise DissectionError(f"{what} boundary splits into several segments")
        return ids[0][2]

    left_boundary = _single_segment(segment_ids[0], "left")
    right_boundary = _single_segment(segment_ids[len(xs) - 1], "right")
    bottom_cut = _single_segment(cut_ids[0], "bottom")
    top_cut = _single_segment(cut_ids[len(ys) - 1], "top")

    nodes = tuple(
        VNode(nid, xs[c], ys[lo], ys[hi], tuple(sorted(lt)), tuple(sorted(rt)))
        for nid, (c, lo, hi, lt, rt) in enumerate(v_nodes)
    )
    cuts = tuple(
        HCut(cid, ys[c], xs[lo], xs[hi], tuple(sorted(ab)), tuple(sorted(be)))
        for cid, (c, lo, hi, ab, be) in enumerate(h_cuts)
    )
    return CutStructure(
        nodes, cuts, left_boundary, right_boundary, bottom_cut, top_cut,
        tile_ends, tile_spans,
    )


def junction_system(
    cs: CutStructure, tiles, field: FieldSpec, vertical_side=None
) -> LinearSystem:
    """Stitching conditions as a linear system over the dissection's field.

    Unknowns are v<k> (the vertical side of tile k) plus x (the big
    horizontal side); the big vertical side is fixed to ``vertical_side``
    (1 by default).  Equations: the left-boundary balance, one balance per
    interior vertical node, the top-edge equation x = sum of horizontal
    sides, and one balance per interior horizontal cut, every horizontal
    side entering as aspect * vertical side.
    """
    one = field.one
    zero = field.zero
    if vertical_side is None:
        vertical_side = one
    aspect = {t.tid: t.aspect for t in tiles}
    order = sorted(aspect)
    variables = tuple(f"v{tid}" for tid in order) + ("x",)
    index = {v: i for i, v in enumerate(variables)}

    def blank():
        return [zero] * len(variables)

    rows = []

    left = cs.v_nodes[cs.left_boundary]
    coeffs = blank()
    for tid in left.right_tiles:
        coeffs[index[f"v{tid}"]] = coeffs[index[f"v{tid}"]] + one
    rows.append((coeffs, vertical_side))

    boundary_nodes = {cs.left_boundary, cs.right_boundary}
    for node in cs.v_nodes:
        if node.nid in boundary_nodes:
            continue
        coeffs = blank()
        for tid in node.left_tiles:
            coeffs[index[f"v{tid}"]] = coeffs[index[f"v{tid}"]] + one
        for tid in node.right_tiles:
            coeffs[index[f"v{tid}"]] = coeffs[index[f"v{tid}"]] - one
        rows.append((coeffs, zero))

    top = cs.h_cuts[cs.top_cut]
    coeffs = blank()
    coeffs[index["x"]] = one
    for tid in top.below_tiles:
        coeffs[index[f"v{tid}"]] = coeffs[index[f"v{tid}"]] - aspect[tid]
    rows.append((coeffs, zero))

    boundary_cuts = {cs.bottom_cut, cs.top_cut}
    for cut in cs.h_cuts:
        if cut.cid in boundary_cuts:
            continue
        coeffs = blank()
        for tid in cut.above_tiles:
            coeffs[index[f"v{tid}"]] = coeffs[index[f"v{tid}"]] + aspect[tid]
        for tid in cut.below_tiles:
            coeffs[index[f"v{tid}"]] = coeffs[index[f"v{tid}"]] - aspect[tid]
        rows.append((coeffs, zero))

    return LinearSystem(variables, tuple(rows))


@dataclass(frozen=True)
class SizingResult:
    sized: Dissection
    ratio: object          # big horizontal side / big vertical side
    system: LinearSystem
    assignment: dict       # variable name -> solved value
    cuts: CutStructure


def solve_sizes(d: Dissection) -> SizingResult:
    """Size a sketched dissection exactly.

    The big vertical side is taken from ``d.big_h`` when present (1
    otherwise); a unique junction solution is turned into exact rectangles
    by propagating cut positions, and the result is geometrically
    validated.  Inconsistent and parametric outcomes, nonpositive sides,
    and a contradicted declared width all raise ``SizingError``.
    """
    cs = extract_cuts(d)
    normalization = d.big_h if d.big_h is not None else d.field.one
    if not normalization > d.field.zero:
        raise SizingError("big vertical side must be positive")
    system = junction_system(cs, d.tiles, d.field, normalization)
    outcome = gauss_jordan(system)
    if isinstance(outcome, Inconsistent):
        raise SizingError("tiling cannot be sized with these ratios")
    if isinstance(outcome, Parametric):
        raise SizingError("combinatorics under-determined")
    assignment = outcome.assignment

    v = {t.tid: assignment[f"v{t.tid}"] for t in d.tiles}
    h = {t.tid: t.aspect * v[t.tid] for t in d.tiles}
    zero = d.field.zero
    for tid, side in v.items():
        if not side > zero:
            raise SizingError(f"degenerate sizing: tile {tid} gets a nonpositive side")
    x_val = assignment["x"]
    if d.big_w is not None and d.big_w != x_val:
        raise SizingError(
            f"declared width {format_scalar(d.big_w)} contradicts the solved "
            f"width {format_scalar(x_val)}"
        )

    node_x = _propagate(
        count=len(cs.v_nodes),
        start=cs.left_boundary,
        zero=zero,
        links=[(cs.tile_ends[tid][0], cs.tile_ends[tid][1], h[tid]) for tid in v],
        what="vertical node",
    )
    cut_y = _propagate(
        count=len(cs.h_cuts),
        start=cs.bottom_cut,
        zero=zero,
        links=[(cs.tile_spans[tid][0], cs.tile_spans[tid][1], v[tid]) for tid in v],
        what="horizontal cut",
    )

    tiles = tuple(
        Tile(
            t.tid,
            t.sketch,
            t.aspect,
            (
                node_x[cs.tile_ends[t.tid][0]],
                cut_y[cs.tile_spans[t.tid][0]],
                h[t.tid],
                v[t.tid],
            ),
        )
        for t in d.tiles
    )
    sized = Dissection(d.field, tiles, big_w=x_val, big_h=normalization)
    report = validate_geometric(sized)
    if not report.ok:
        raise SizingError(
            "solved sides do not assemble into an exact tiling: "
            + "; ".join(report.issues)
        )
    ratio = x_val / normalization
    return SizingResult(sized, ratio, system, assignment, cs)


def _propagate(count, start, zero, links, what):
    """Assign positions along a chain of exact length links, checking agreement."""
    pos = {start: zero}
    adjacency: dict[int, list] = {}
    for lo, hi, length in links:
        adjacency.setdefault(lo, []).append((hi, length, 1))
        adjacency.setdefault(hi, []).append((lo, length, -1))
    queue = [start]
    while queue:
        cur = queue.pop(0)
        for other, length, sense in adjacency.get(cur, ()):
            candidate = pos[cur] + length if sense > 0 else pos[cur] - length
            if other in pos:
                if pos[other] != candidate:
                    raise SizingError(f"{what} positions are contradictory")
            else:
                pos[other] = candidate
                queue.append(other)
    if len(pos) != count:
        raise SizingError(f"some {what} is unreachable from the boundary")
    return pos


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    issues: tuple[str, ...] = ()


def validate_geometric(d: Dissection) -> ValidationReport:
    """Certify that the exact rectangles tile the big rectangle.

    Exact containment of every tile, pairwise disjoint interiors, and the
    area identity together guarantee an exact tiling.
    """
    if not d.is_sized:
        raise DissectionError("validate_geometric needs exact rectangles and big sides")
    issues = []
    zero = d.field.zero
    area = zero
    tiles = d.tiles
    for t in tiles:
        x, y, w, h = t.rect
        if not (w > zero and h > zero):
            issues.append(f"tile {t.tid} has nonpositive size")
            continue
        if w != t.aspect * h:
            issues.append(f"tile {t.tid} violates its aspect ratio")
        if x < zero or y < zero or x + w > d.big_w or y + h > d.big_h:
            issues.append(f"tile {t.tid} leaves the big rectangle")
        area = area + w * h
    for i in range(len(tiles)):
        xi, yi, wi, hi = tiles[i].rect
        for j in range(i + 1, len(tiles)):
            xj, yj, wj, hj = tiles[j].rect
            if xi < xj + wj and xj < xi + wi and yi < yj + hj and yj < yi + hi:
                issues.append(
                    f"tiles {tiles[i].tid} and {tiles[j].tid} overlap"
                )
    if area != d.big_w * d.big_h:
        issues.append("tile areas do not sum to the big rectangle's area")
    return ValidationReport(not issues, tuple(issues))


@dataclass(frozen=True)
class DehnReport:
    all_squares: bool
    non_square_tiles: tuple[int, ...]
    ratio: object
    ratio_is_rational: bool

    @property
    def ok(self) -> bool:
        return self.all_squares and self.ratio_is_rational


def dehn_check(d: Dissection) -> DehnReport:
    """Executable form of the squares-force-rational-ratio theorem.

    Confirms every tile is an exact square and reports whether the big
    rectangle's horizontal/vertical ratio is rational.
    """
    report = validate_geometric(d)
    if not report.ok:
        raise DissectionError("dissection fails geometric validation: "
                              + "; ".join(report.issues))
    non_square = tuple(t.tid for t in d.tiles if t.rect[2] != t.rect[3])
    ratio = d.big_w / d.big_h
    rational = not isinstance(ratio, QuadExt) or ratio.is_rational
    return DehnReport(not non_square, non_square, ratio, rational)


# --- JSON round trip --------------------------------------------------------


def dissection_to_json(d: Dissection) -> dict:
    return {
        "field": d.field.to_json(),
        "big": {
            "w": format_scalar(d.big_w) if d.big_w is not None else None,
            "h": format_scalar(d.big_h) if d.big_h is not None else None,
        },
        "tiles": [
            {
                "id": t.tid,
                "sketch": list(t.sketch),
                "aspect": format_scalar(t.aspect),
                "rect": [format_scalar(c) for c in t.rect] if t.rect else None,
            }
            for t in d.tiles
        ],
    }


def dissection_from_json(obj: dict) -> Dissection:
    try:
        field = FieldSpec.from_json(obj["field"])
        big = obj.get("big") or {}
        big_w = field.parse(big["w"]) if big.get("w") else None
        big_h = field.parse(big["h"]) if big.get("h") else None
        tiles = []
        for entry in obj["tiles"]:
            sketch = tuple(float(c) for c in entry["sketch"])
            if len(sketch) != 4:
                raise DissectionError(f"tile {entry.get('id')} sketch needs 4 numbers")
            rect = entry.get("rect")
            tiles.append(
                Tile(
                    int(entry["id"]),
                    sketch,
                    field.parse(entry["aspect"]),
                    tuple(field.parse(c) for c in rect) if rect else None,
                )
            )
    except (KeyError, TypeError) as exc:
        raise DissectionError(f"malformed dissection object: {exc}") from exc
    return Dissection(field, tiles, big_w=big_w, big_h=big_h)


def load_dissection(text: str) -> Dissection:
    return dissection_from_json(json.loads(text))


def dump_dissection(d: Dissection) -> str:
    return json.dumps(dissection_to_json(d), indent=2) + "\n"


# --- rendering ---------------------------------------------------------------

_SVG_SIZE = 480.0


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def render_svg(d: Dissection) -> str:
    """Deterministic SVG for a sized dissection, one labeled rect per tile."""
    if not d.is_sized:
        raise DissectionError("render needs a sized dissection")
    big_w = float(d.big_w)
    big_h = float(d.big_h)
    scale = _SVG_SIZE / max(big_w, big_h)
    width = big_w * scale
    height = big_h * scale
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect x="0" y="0" width="{_fmt(width)}" height="{_fmt(height)}" '
        'fill="white" stroke="none"/>',
    ]
    for t in d.tiles:
        x, y, w, h = (float(c) for c in t.rect)
        sx = x * scale
        sy = (big_h - y - h) * scale  # flip: sketch y grows upward, SVG downward
        sw = w * scale
        sh = h * scale
        lines.append(
            f'<rect x="{_fmt(sx)}" y="{_fmt(sy)}" width="{_fmt(sw)}" '
            f'height="{_fmt(sh)}" fill="none" stroke="black" stroke-width="1"/>'
        )
        font = min(sw, sh) / 2.5
        lines.append(
            f'<text x="{_fmt(sx + sw / 2)}" y="{_fmt(sy + sh / 2 + font / 3)}" '
            f'font-size="{_fmt(font)}" text-anchor="middle" '
            f'font-family="sans-serif" fill="black">{t.tid}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


