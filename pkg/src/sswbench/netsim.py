"""Round-based multi-hop WSN simulator with a first-order radio model.

Every round each alive, connected node encodes one reading, fragments it
into link-layer frames and forwards the frames hop by hop up a min-hop tree
to the sink.  A transmitter pays ``e_elec*k + eps_amp*k*d**2`` for ``k``
bits sent over distance ``d``; a receiving node pays ``e_elec*k``; the sink
is mains powered.

There is no loss, contention or retransmission.  Routing is recomputed only
at round boundaries.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import NamedTuple

from .encoding import encode
from .observation import DataRecord, QuantityObservation, SensorReading, perturb_value
from .payload import DEFAULT_OPTIONS, EncodeOptions, EncodingId

SINK = -1
MAX_TOPOLOGY_RETRIES = 100


class TopologyError(RuntimeError):
    pass


@dataclass(frozen=True)
class RadioEnergyModel:
    e_elec: float = 50e-9  # J/bit
    eps_amp: float = 100e-12  # J/bit/m^2
    frame_payload: int = 102  # bytes
    frame_overhead: int = 25  # bytes

    def __post_init__(self):
        for name in ("e_elec", "eps_amp", "frame_payload", "frame_overhead"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)!r}")

    def tx_energy(self, bits: int, distance: float) -> float:
        return self.e_elec * bits + self.eps_amp * bits * distance * distance

    def rx_energy(self, bits: int) -> float:
        return self.e_elec * bits

    def frames(self, payload_bytes: int) -> list[int]:
        """On-air size of each frame (payload chunk plus overhead); last frame may be partial."""
        full, rest = divmod(payload_bytes, self.frame_payload)
        sizes = [self.frame_payload + self.frame_overhead] * full
        if rest:
            sizes.append(rest + self.frame_overhead)
        return sizes


@dataclass
class NodeState:
    id: int
    position: tuple[float, float]
    residual_energy: float
    alive: bool = True


@dataclass(frozen=True)
class Topology:
    positions: tuple[tuple[float, float], ...]
    sink: tuple[float, float]
    radio_range: float
    seed: int = 0
    field_side: float = 0.0
    links: dict[int, tuple[int, ...]] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        ids = [SINK, *range(len(self.positions))]
        adj: dict[int, list[int]] = {i: [] for i in ids}
        for a_idx, a in enumerate(ids):
            for b in ids[a_idx + 1:]:
                if self.distance(a, b) <= self.radio_range:
                    adj[a].append(b)
                    adj[b].append(a)
        object.__setattr__(self, "positions", tuple(tuple(p) for p in self.positions))
        object.__setattr__(self, "links", {i: tuple(sorted(v)) for i, v in adj.items()})

    @property
    def n(self) -> int:
        return len(self.positions)

    def position(self, node: int) -> tuple[float, float]:
        return self.sink if node == SINK else self.positions[node]

    def distance(self, a: int, b: int) -> float:
        return math.dist(self.position(a), self.position(b))

    def nodes(self, initial_energy_j: float = 0.0) -> list[NodeState]:
        return [NodeState(i, p, initial_energy_j, initial_energy_j > 0) for i, p in enumerate(self.positions)]

    def is_connected(self) -> bool:
        return len(route(self).parent) == self.n


def build_topology(n: int, field_side: float, radio_range: float, seed: int,
                   max_retries: int = MAX_TOPOLOGY_RETRIES) -> Topology:
    """Place ``n`` nodes uniformly in a square with the sink at its centre.

    Attempt ``k`` draws x then y for each node in id order from
    ``random.Random(f"topology/{seed}/{k}")``; the first connected draw wins.
    """
    if n < 1:
        raise ValueError(f"need at least one node, got {n}")
    if field_side <= 0 or radio_range <= 0:
        raise ValueError("field_side and radio_range must be positive")
    sink = (field_side / 2, field_side / 2)
    for attempt in range(max_retries + 1):
        rng = random.Random(f"topology/{seed}/{attempt}")
        positions = tuple((rng.uniform(0, field_side), rng.uniform(0, field_side)) for _ in range(n))
        topo = Topology(positions, sink, radio_range, seed, field_side)
        if topo.is_connected():
            return topo
    raise TopologyError(
        f"no connected placement of {n} nodes in a {field_side:g} m field with {radio_range:g} m range "
        f"after {max_retries + 1} draws; use a larger radio range")


class RoutingTree(NamedTuple):
    parent: dict[int, int]
    hops: dict[int, int]

    def children(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {SINK: []}
        for node in self.parent:
            out.setdefault(node, [])
        for node, par in self.parent.items():
            out[par].append(node)
        return out


def route(topology: Topology, alive: set[int] | None = None) -> RoutingTree:
    """Min-hop tree toward the sink over ``alive`` nodes (all nodes by default).

    Among equally short options a node takes the lowest-id parent, then the
    nearest one.  Unreachable nodes are absent from the result.
    """
    if alive is None:
        alive = set(range(topology.n))
    parent: dict[int, int] = {}
    hops: dict[int, int] = {SINK: 0}
    frontier = [SINK]
    depth = 0
    while frontier:
        depth += 1
        options: dict[int, list[int]] = {}
        for u in frontier:
            for v in topology.links[u]:
                if v in alive and v not in hops:
                    options.setdefault(v, []).append(u)
        for v, cands in options.items():
            parent[v] = min(cands, key=lambda u: (u, topology.distance(u, v)))
            hops[v] = depth
        frontier = sorted(options)
    del hops[SINK]
    return RoutingTree(parent, hops)


class TxEvent(NamedTuple):
    round: int
    sender: int
    receiver: int
    bytes: int
    joules: float


@dataclass
class RunMetrics:
    total_tx_bytes: int = 0
    total_rx_bytes: int = 0
    sink_rx_bytes: int = 0
    per_node_tx: dict[int, int] = field(default_factory=dict)
    energy_spent: float = 0.0
    rounds_until_first_death: int | None = None
    rounds_completed: int = 0
    residual_energy: dict[int, float] = field(default_factory=dict)


def round_reading(template: SensorReading, seed: int, round_no: int, node: int) -> SensorReading:
    """Template reading for ``node`` with values nudged in their last digit."""
    rng = random.Random(f"reading/{seed}/{round_no}/{node}")
    fields = tuple(
        QuantityObservation(q.name, q.definition, q.uom, perturb_value(q.value, rng))
        for q in template.record.fields
    )
    return SensorReading(node, template.time, DataRecord(template.record.definition, fields))


def run(topology: Topology, encoding_id: EncodingId | str, reading_template: SensorReading,
        rounds: int, energy: RadioEnergyModel = RadioEnergyModel(), initial_energy_j: float = 2.0,
        options: EncodeOptions = DEFAULT_OPTIONS, event_log: list[TxEvent] | None = None) -> RunMetrics:
    if rounds < 0:
        raise ValueError(f"rounds must be >= 0, got {rounds}")
    encoding_id = EncodingId(encoding_id)
    nodes = topology.nodes(initial_energy_j)
    metrics = RunMetrics(per_node_tx={i: 0 for i in range(topology.n)})
    frame_cache: dict[int, list[int]] = {}

    def kill(node: NodeState, round_no: int):
        node.alive = False
        node.residual_energy = 0.0
        if metrics.rounds_until_first_death is None:
            metrics.rounds_until_first_death = round_no

    for r in range(rounds):
        for node in nodes:
            if node.alive and node.residual_energy <= 0:
                kill(node, r)
        own_bytes: dict[int, int] = {}
        while True:
            alive = {nd.id for nd in nodes if nd.alive}
            tree = route(topology, alive)
            for v in tree.parent:
                if v not in own_bytes:
                    payload = encode(round_reading(reading_template, topology.seed, r, v), encoding_id, options)
                    own_bytes[v] = payload.size_bytes
            # frame bytes each node puts on air this round: its own plus its subtree's
            through = {v: sum(_frames(energy, own_bytes[v], frame_cache)) for v in tree.parent}
            for v in sorted(tree.parent, key=lambda v: -tree.hops[v]):
                p = tree.parent[v]
                if p != SINK:
                    through[p] += through[v]
            cost = {}
            for v, p in tree.parent.items():
                tx_bits = 8 * through[v]
                rx_bits = tx_bits - 8 * sum(_frames(energy, own_bytes[v], frame_cache))
                cost[v] = energy.tx_energy(tx_bits, topology.distance(v, p)) + energy.rx_energy(rx_bits)
            doomed = [v for v, c in cost.items() if c > nodes[v].residual_energy]
            if not doomed:
                break
            for v in doomed:
                kill(nodes[v], r)

        if not tree.parent:
            break
        for v, p in tree.parent.items():
            nodes[v].residual_energy -= cost[v]
            metrics.energy_spent += cost[v]
            metrics.per_node_tx[v] += through[v]
            metrics.total_tx_bytes += through[v]
            metrics.total_rx_bytes += through[v]
            if p == SINK:
                metrics.sink_rx_bytes += through[v]
        if event_log is not None:
            _log_round(event_log, r, topology, tree, own_bytes, energy, frame_cache)
        metrics.rounds_completed += 1
        if not any(nd.alive for nd in nodes):
            break

    for node in nodes:
        if node.alive and node.residual_energy <= 0:
            kill(node, metrics.rounds_completed)
    metrics.residual_energy = {nd.id: nd.residual_energy for nd in nodes}
    return metrics


def _frames(energy: RadioEnergyModel, payload_bytes: int, cache: dict[int, list[int]]) -> list[int]:
    sizes = cache.get(payload_bytes)
    if sizes is None:
        sizes = cache[payload_bytes] = energy.frames(payload_bytes)
    return sizes


def _log_round(log, r, topology, tree, own_bytes, energy, cache):
    for origin in sorted(tree.parent):
        frames = _frames(energy, own_bytes[origin], cache)
        v = origin
        while v != SINK:
            p = tree.parent[v]
            d = topology.distance(v, p)
            for size in frames:
                bits = 8 * size
                joules = energy.tx_energy(bits, d) + (energy.rx_energy(bits) if p != SINK else 0.0)
                log.append(TxEvent(r, v, p, size, joules))
            v = p
