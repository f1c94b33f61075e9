"""Resistor networks with one ideal battery, solved exactly.

A netlist is a connected multigraph: resistors carry positive resistances
from any of the exact scalar fields, and exactly one battery edge fixes the
source.  The current-law and voltage-law equations are assembled into a
square linear system (one node equation dropped as redundant, one voltage
equation per fundamental cycle of a deterministic spanning tree) and solved
by exact elimination.  Over Q(t) the same machinery yields the network
resistance as a rational function of a symbolic resistor value.

Netlist text format, one item per line ("#" starts a comment):

    N <name>                      optional isolated-node declaration
    R <id> <node_a> <node_b> <scalar>
    V <node_plus> <node_minus> <scalar>    exactly once

Scalars use the shared textual syntax; in symbolic mode the bare token
``t`` (or ``c*t``) denotes the indeterminate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .fields import (
    RatFunc,
    ScalarParseError,
    format_scalar,
    one_like,
    parse_quadext,
    parse_rational,
    parse_symbolic_scalar,
    zero_like,
)
from .linear import Inconsistent, LinearSystem, Parametric, gauss_jordan


class CircuitError(Exception):
    """A netlist violates the model or cannot carry a well-defined flow."""


@dataclass(frozen=True)
class Resistor:
    rid: int
    node_a: str
    node_b: str
    value: object  # resistance, oriented node_a -> node_b


@dataclass(frozen=True)
class Battery:
    plus: str
    minus: str
    voltage: object


class Netlist:
    """Immutable resistor network with a single battery."""

    __slots__ = ("resistors", "battery", "declared_nodes")

    def __init__(self, resistors, battery: Battery, declared_nodes=()):
        object.__setattr__(self, "resistors", tuple(resistors))
        object.__setattr__(self, "battery", battery)
        object.__setattr__(self, "declared_nodes", frozenset(declared_nodes))
        self._check()

    def __setattr__(self, name, value):
        raise AttributeError("Netlist is immutable")

    @property
    def nodes(self) -> tuple[str, ...]:
        names = set(self.declared_nodes)
        names.update((self.battery.plus, self.battery.minus))
        for r in self.resistors:
            names.add(r.node_a)
            names.add(r.node_b)
        return tuple(sorted(names))

    def _check(self):
        if self.battery.plus == self.battery.minus:
            raise CircuitError("battery terminals must be distinct nodes")
        seen = set()
        for r in self.resistors:
            if r.rid in seen:
                raise CircuitError(f"duplicate resistor id {r.rid}")
            seen.add(r.rid)
            if not isinstance(r.value, RatFunc) and not r.value > zero_like(r.value):
                raise CircuitError(f"resistor {r.rid} has nonpositive resistance")
        nodes = self.nodes
        adj = {n: set() for n in nodes}
        for r in self.resistors:
            adj[r.node_a].add(r.node_b)
            adj[r.node_b].add(r.node_a)
        adj[self.battery.plus].add(self.battery.minus)
        adj[self.battery.minus].add(self.battery.plus)
        stack = [nodes[0]]
        reached = {nodes[0]}
        while stack:
            for m in adj[stack.pop()]:
                if m not in reached:
                    reached.add(m)
                    stack.append(m)
        if len(reached) != len(nodes):
            raise CircuitError("netlist graph is not connected")

    def resistor(self, rid: int) -> Resistor:
        for r in self.resistors:
            if r.rid == rid:
                return r
        raise KeyError(f"no resistor with id {rid}")


@dataclass(frozen=True)
class FlowSolution:
    edge_current: dict        # resistor id -> current, signed along a -> b
    battery_current: object
    potential: dict           # node -> potential; plus minus minus equals U
    total_resistance: object | None  # None only for a zero-voltage battery


_BATTERY_KEY = ("V",)


def _edges(net: Netlist):
    """All edges as (key, node_a, node_b); key orders resistors before the battery."""
    out = [(("R", r.rid), r.node_a, r.node_b) for r in net.resistors]
    out.append((_BATTERY_KEY, net.battery.minus, net.battery.plus))
    return out


def _spanning_tree(net: Netlist) -> dict[str, tuple]:
    """Lexicographic BFS tree from the plus terminal: node -> (edge, parent)."""
    incident: dict[str, list] = {n: [] for n in net.nodes}
    for key, a, b in _edges(net):
        incident[a].append((b, key, a, b))
        incident[b].append((a, key, a, b))
    for lst in incident.values():
        lst.sort(key=lambda item: (item[0], item[1]))
    root = net.battery.plus
    parent: dict[str, tuple] = {root: ()}
    queue = [root]
    while queue:
        node = queue.pop(0)
        for other, key, a, b in incident[node]:
            if other in parent:
                continue
            parent[other] = ((key, a, b), node)
            queue.append(other)
    return parent


def _tree_path(parent, node: str):
    """Edges from the root down to node as (edge, child) pairs."""
    path = []
    while parent[node]:
        edge, up = parent[node]
        path.append((edge, node))
        node = up
    path.reverse()
    return path


def kirchhoff_system(net: Netlist) -> LinearSystem:
    """Current-law plus cycle voltage-law equations; unknowns I<id> and I.

    One node equation (the minus terminal's) is dropped as the redundant
    one; voltage equations come from the fundamental cycles of the BFS
    spanning tree, so the row count equals the edge count.
    """
    one = one_like(net.battery.voltage)
    zero = zero_like(net.battery.voltage)
    variables = tuple(f"I{r.rid}" for r in net.resistors) + ("I",)
    var_index = {v: i for i, v in enumerate(variables)}
    rows = []

    def blank():
        return [zero] * len(variables)

    # current law: outgoing minus incoming vanishes at every kept node
    for node in net.nodes:
        if node == net.battery.minus:
            continue
        coeffs = blank()
        for r in net.resistors:
            if r.node_a == node:
                coeffs[var_index[f"I{r.rid}"]] = coeffs[var_index[f"I{r.rid}"]] + one
            if r.node_b == node:
                coeffs[var_index[f"I{r.rid}"]] = coeffs[var_index[f"I{r.rid}"]] - one
        if net.battery.plus == node:
            coeffs[var_index["I"]] = coeffs[var_index["I"]] - one
        rows.append((coeffs, zero))

    # voltage law around each fundamental cycle of the spanning tree
    parent = _spanning_tree(net)
    tree_edges = {info[0][0] for info in parent.values() if info}
    resistance = {("R", r.rid): r.value for r in net.resistors}
    for key, a, b in _edges(net):
        if key in tree_edges:
            continue
        # walk a -> b along the chord, then b -> a through the tree
        traversal = [(key, a, b, 1)]
        path_a = _tree_path(parent, a)
        path_b = _tree_path(parent, b)
        shared = 0
        while (
            shared < len(path_a)
            and shared < len(path_b)
            and path_a[shared] == path_b[shared]
        ):
            shared += 1
        for (ekey, ea, eb), child in reversed(path_b[shared:]):
            # moving child -> parent: against the tree's downward step
            sense = -1 if eb == child else 1
            traversal.append((ekey, ea, eb, sense))
        for (ekey, ea, eb), child in path_a[shared:]:
            direction = 1 if eb == child else -1
            traversal.append((ekey, ea, eb, direction))
        coeffs = blank()
        rhs = zero
        for ekey, ea, eb, sense in traversal:
            if ekey == _BATTERY_KEY:
                rhs = rhs + net.battery.voltage if sense > 0 else rhs - net.battery.voltage
            else:
                idx = var_index[f"I{ekey[1]}"]
                term = resistance[ekey]
                coeffs[idx] = coeffs[idx] + term if sense > 0 else coeffs[idx] - term
        rows.append((coeffs, rhs))

    return LinearSystem(variables, tuple(rows))


def solve_flow(net: Netlist) -> FlowSolution:
    """Solve the Kirchhoff system; the outcome is provably unique."""
    outcome = gauss_jordan(kirchhoff_system(net))
    if isinstance(outcome, (Parametric, Inconsistent)):
        raise CircuitError(
            "Kirchhoff system failed to determine a unique flow; "
            "this contradicts the uniqueness theorem for valid netlists"
        )
    currents = {r.rid: outcome.assignment[f"I{r.rid}"] for r in net.resistors}
    battery_current = outcome.assignment["I"]

    u = net.battery.voltage
    zero = zero_like(u)
    potential = {net.battery.plus: u}
    parent = _spanning_tree(net)
    order = sorted(parent, key=lambda n: len(_tree_path(parent, n)))
    resistance = {r.rid: r.value for r in net.resistors}
    for node in order:
        if not parent[node]:
            continue
        (key, a, b), up = parent[node][0], parent[node][1]
        base = potential[up]
        if key == _BATTERY_KEY:
            # stepping plus -> minus through the battery lowers by U
            potential[node] = base - u if node == net.battery.minus else base + u
        else:
            drop = currents[key[1]] * resistance[key[1]]
            # resistor a -> b drops by I*R from a to b
            potential[node] = base - drop if node == b else base + drop

    if battery_current == zero:
        if u != zero:
            raise CircuitError(
                "battery carries no current: the network has no closed "
                "path through the battery"
            )
        total = None
    else:
        total = u / battery_current
    return FlowSolution(currents, battery_current, potential, total)


def resistance(net: Netlist):
    """Total resistance U / I of the network."""
    flow = solve_flow(net)
    if flow.total_resistance is None:
        raise CircuitError("resistance is undefined for a zero-voltage battery")
    return flow.total_resistance


def series(r1, r2):
    if not r1 > zero_like(r1) or not r2 > zero_like(r2):
        raise ValueError("series resistances must be positive")
    return r1 + r2


def parallel(r1, r2):
    if not r1 > zero_like(r1) or not r2 > zero_like(r2):
        raise ValueError("parallel resistances must be positive")
    return r1 * r2 / (r1 + r2)


def symbolic_resistance(net: Netlist) -> RatFunc:
    """Resistance of a network whose resistors are rational functions of t.

    The battery voltage must be the constant 1; the result is returned in
    lowest terms with a monic denominator.  Evaluating it at a rational t0
    agrees with the resistance of the network instantiated at t0 (specific
    t0 may still hit a vanishing denominator, detected only on evaluation).
    """
    for r in net.resistors:
        if not isinstance(r.value, RatFunc):
            raise CircuitError(f"resistor {r.rid} is not symbolic")
    if net.battery.voltage != RatFunc.constant(1):
        raise CircuitError("symbolic resistance expects a unit battery")
    return resistance(net)


def replace_resistor_with_network(
    outer: Netlist, resistor_id: int, inner: Netlist
) -> Netlist:
    """Splice a two-terminal network in place of one resistor.

    The inner network's battery is discarded; its terminals take the place
    of the removed resistor's endpoints.  The inner resistance must equal
    the removed resistance exactly, which is what keeps every outer current
    and the total resistance unchanged.
    """
    victim = outer.resistor(resistor_id)
    inner_res = resistance(inner)
    if inner_res != victim.value:
        raise CircuitError(
            f"replacement network has resistance {format_scalar(inner_res)}, "
            f"resistor {resistor_id} has {format_scalar(victim.value)}"
        )
    rename = {
        inner.battery.plus: victim.node_a,
        inner.battery.minus: victim.node_b,
    }
    offset = max(r.rid for r in outer.resistors)
    resistors = [r for r in outer.resistors if r.rid != resistor_id]
    for r in inner.resistors:
        a = rename.get(r.node_a, f"{victim.node_a}.{resistor_id}.{r.node_a}")
        b = rename.get(r.node_b, f"{victim.node_a}.{resistor_id}.{r.node_b}")
        resistors.append(Resistor(offset + r.rid, a, b, r.value))
    return Netlist(resistors, outer.battery)


# --- netlist text ----------------------------------------------------------


def parse_netlist(text: str, symbolic: bool = False) -> Netlist:
    """Parse netlist text; the scalar field is inferred from the scalars."""
    resistor_lines = []
    battery_line = None
    declared = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0].upper()
        if tag == "N" and len(parts) == 2:
            declared.append(parts[1])
        elif tag == "R" and len(parts) >= 5:
            # the scalar may itself contain whitespace
            resistor_lines.append((lineno, parts[1:4] + [" ".join(parts[4:])]))
        elif tag == "V" and len(parts) >= 4:
            if battery_line is not None:
                raise ScalarParseError("netlist declares more than one battery")
            battery_line = (lineno, parts[1:3] + [" ".join(parts[3:])])
        else:
            raise ScalarParseError(f"bad netlist line {lineno}: {raw!r}")
    if battery_line is None:
        raise ScalarParseError("netlist declares no battery")

    scalars = [fields[-1] for _, fields in resistor_lines]
    scalars.append(battery_line[1][-1])
    if symbolic:
        parse = parse_symbolic_scalar
    else:
        radicands = {int(m) for s in scalars for m in re.findall(r"sqrt\((\d+)\)", s)}
        if len(radicands) > 1:
            raise ScalarParseError(
                f"netlist mixes radicands {sorted(radicands)}; one field per file"
            )
        if radicands:
            d = radicands.pop()

            def parse(s, _d=d):
                return parse_quadext(s, _d)

        else:
            parse = parse_rational

    resistors = []
    for lineno, (rid, a, b, scalar) in resistor_lines:
        try:
            value = parse(scalar)
        except ScalarParseError as exc:
            raise ScalarParseError(f"line {lineno}: {exc}") from exc
        resistors.append(Resistor(int(rid), a, b, value))
    lineno, (plus, minus, scalar) = battery_line
    try:
        voltage = parse(scalar)
    except ScalarParseError as exc:
        raise ScalarParseError(f"line {lineno}: {exc}") from exc
    return Netlist(resistors, Battery(plus, minus, voltage), declared)


def format_netlist(net: Netlist) -> str:
    lines = []
    endpoint_nodes = {net.battery.plus, net.battery.minus}
    for r in net.resistors:
        endpoint_nodes.update((r.node_a, r.node_b))
    for node in sorted(net.declared_nodes - endpoint_nodes):
        lines.append(f"N {node}")
    for r in net.resistors:
        lines.append(f"R {r.rid} {r.node_a} {r.node_b} {_scalar_text(r.value)}")
    b = net.battery
    lines.append(f"V {b.plus} {b.minus} {_scalar_text(b.voltage)}")
    return "\n".join(lines) + "\n"


def _scalar_text(value) -> str:
    if isinstance(value, RatFunc):
        return value.format()
    return format_scalar(value)
