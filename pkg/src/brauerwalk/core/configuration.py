# src/brauerwalk/core/configuration.py

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple
from enum import Enum
from dataclasses import dataclass, field
import logging

import networkx as nx

from .errors import ConfigurationError, InputError

DEFAULT_MULTIPLICITY_CAP = 16


class Severity(Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True, order=True)
class Germ:
    polygon: str
    slot: int

    def __str__(self) -> str:
        return f"{self.polygon}#{self.slot}"


@dataclass(frozen=True)
class Diagnostic:
    severity: Severity
    code: str
    message: str
    ids: Tuple[str, ...] = ()

    def to_dict(self) -> Dict:
        return {
            'severity': self.severity.value,
            'code': self.code,
            'message': self.message,
            'ids': list(self.ids)
        }


@dataclass
class ConfigDiagnostics:
    entries: List[Diagnostic] = field(default_factory=list)

    def add(self, code: str, message: str, *ids: str, severity: Severity = Severity.ERROR):
        self.entries.append(Diagnostic(severity, code, message, tuple(str(i) for i in ids)))

    @property
    def is_empty(self) -> bool:
        return not self.entries

    def codes(self) -> List[str]:
        return [d.code for d in self.entries]

    def to_list(self) -> List[Dict]:
        return [d.to_dict() for d in self.entries]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class BrauerConfig:
    """Vertices with multiplicities, polygons as germ lists and per-vertex cyclic orders.

    Slot i of a polygon's germ list is the germ (polygon, i); its entry is the vertex it sits at.
    Orders may omit vertices of valency one, their one-element order is derived.
    """

    vertices: Tuple[Tuple[str, int], ...]
    polygons: Tuple[Tuple[str, Tuple[str, ...]], ...]
    orders: Tuple[Tuple[str, Tuple[Germ, ...]], ...] = ()
    _index: Dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, '_index', self._build_index())

    @classmethod
    def from_dicts(cls,
                   vertices: Mapping[str, int],
                   polygons: Mapping[str, Sequence[str]],
                   orders: Optional[Mapping[str, Sequence[Germ]]] = None) -> 'BrauerConfig':
        orders = orders or {}
        return cls(
            vertices=tuple((v, int(m)) for v, m in vertices.items()),
            polygons=tuple((x, tuple(germs)) for x, germs in polygons.items()),
            orders=tuple((v, tuple(order)) for v, order in orders.items())
        )

    def _build_index(self) -> Dict:

        multiplicity = {}
        for vertex, mult in self.vertices:
            multiplicity.setdefault(vertex, mult)

        polygon_vertices = {}
        for polygon, germ_vertices in self.polygons:
            polygon_vertices.setdefault(polygon, tuple(germ_vertices))

        incident: Dict[str, List[Germ]] = {}
        for polygon, germ_vertices in polygon_vertices.items():
            for slot, vertex in enumerate(germ_vertices):
                incident.setdefault(vertex, []).append(Germ(polygon, slot))

        order_map: Dict[str, Tuple[Germ, ...]] = {}
        for vertex, order in self.orders:
            order_map.setdefault(vertex, tuple(order))
        for vertex, germs in incident.items():
            if vertex not in order_map and len(germs) == 1:
                order_map[vertex] = (germs[0],)

        successor = {}
        predecessor = {}
        for vertex, order in order_map.items():
            for i, germ in enumerate(order):
                successor.setdefault(germ, order[(i + 1) % len(order)])
                predecessor.setdefault(germ, order[(i - 1) % len(order)])

        return {
            'multiplicity': multiplicity,
            'polygon_vertices': polygon_vertices,
            'incident': incident,
            'orders': order_map,
            'successor': successor,
            'predecessor': predecessor
        }

    # -- basic accessors -------------------------------------------------

    @property
    def vertex_ids(self) -> List[str]:
        return list(self._index['multiplicity'].keys())

    @property
    def polygon_ids(self) -> List[str]:
        return list(self._index['polygon_vertices'].keys())

    def multiplicity(self, vertex: str) -> int:
        try:
            return self._index['multiplicity'][vertex]
        except KeyError:
            raise InputError(f"unknown vertex {vertex}")

    def polygon_germs(self, polygon: str) -> List[Germ]:
        try:
            size = len(self._index['polygon_vertices'][polygon])
        except KeyError:
            raise InputError(f"unknown polygon {polygon}")
        return [Germ(polygon, slot) for slot in range(size)]

    def polygon_size(self, polygon: str) -> int:
        return len(self.polygon_germs(polygon))

    def germs(self) -> List[Germ]:
        return sorted(g for x in self.polygon_ids for g in self.polygon_germs(x))

    def has_germ(self, germ: Germ) -> bool:
        vertices = self._index['polygon_vertices'].get(germ.polygon)
        return vertices is not None and 0 <= germ.slot < len(vertices)

    def kappa(self, germ: Germ) -> str:
        if not self.has_germ(germ):
            raise InputError(f"unknown germ {germ}")
        return self._index['polygon_vertices'][germ.polygon][germ.slot]

    def pi(self, germ: Germ) -> str:
        if not self.has_germ(germ):
            raise InputError(f"unknown germ {germ}")
        return germ.polygon

    def germs_at(self, vertex: str) -> List[Germ]:
        return list(self._index['incident'].get(vertex, []))

    def order(self, vertex: str) -> Tuple[Germ, ...]:
        try:
            return self._index['orders'][vertex]
        except KeyError:
            raise InputError(f"no cyclic order at vertex {vertex}")

    def canonical_order(self, vertex: str) -> Tuple[Germ, ...]:
        order = self.order(vertex)
        rotations = [order[i:] + order[:i] for i in range(len(order))]
        return min(rotations)

    def valency(self, vertex: str) -> int:
        if vertex not in self._index['multiplicity'] and vertex not in self._index['incident']:
            raise InputError(f"unknown vertex {vertex}")
        return len(self._index['incident'].get(vertex, []))

    def sigma(self, germ: Germ) -> Germ:
        try:
            return self._index['successor'][germ]
        except KeyError:
            raise InputError(f"unknown germ {germ}")

    def sigma_inv(self, germ: Germ) -> Germ:
        try:
            return self._index['predecessor'][germ]
        except KeyError:
            raise InputError(f"unknown germ {germ}")

    def sigma_power(self, germ: Germ, k: int) -> Germ:
        for _ in range(k % self.valency(self.kappa(germ))):
            germ = self.sigma(germ)
        return germ

    # -- truncation ------------------------------------------------------

    def is_truncated_vertex(self, vertex: str) -> bool:
        return self.valency(vertex) == 1 and self.multiplicity(vertex) == 1

    def is_truncated_polygon(self, polygon: str) -> bool:
        truncated = any(self.is_truncated_vertex(self.kappa(g)) for g in self.polygon_germs(polygon))
        if truncated and self.polygon_size(polygon) != 2:
            raise ConfigurationError(f"truncated polygon {polygon} is not a 2-gon")
        return truncated

    def is_truncated_edge(self, polygon: str) -> bool:
        return self.is_truncated_polygon(polygon)

    def is_exceptional(self) -> bool:
        if len(self.polygon_ids) != 1:
            return False
        germs = self.polygon_germs(self.polygon_ids[0])
        if len(germs) != 2:
            return False
        ends = [self.kappa(g) for g in germs]
        return ends[0] != ends[1] and all(self.multiplicity(v) == 1 for v in ends)

    def is_brauer_graph(self) -> bool:
        return all(self.polygon_size(x) == 2 for x in self.polygon_ids)

    def is_self_folded(self, polygon: str) -> bool:
        ends = [self.kappa(g) for g in self.polygon_germs(polygon)]
        return len(set(ends)) < len(ends)

    # -- connectivity ----------------------------------------------------

    def incidence_graph(self) -> nx.Graph:
        graph = nx.Graph()
        for vertex in self.vertex_ids:
            graph.add_node(('vertex', vertex))
        for polygon in self.polygon_ids:
            graph.add_node(('polygon', polygon))
            for germ in self.polygon_germs(polygon):
                graph.add_edge(('polygon', polygon), ('vertex', self.kappa(germ)))
        return graph

    def is_connected(self) -> bool:
        graph = self.incidence_graph()
        return graph.number_of_nodes() > 0 and nx.is_connected(graph)

    # -- germ references -------------------------------------------------

    def occurrence(self, germ: Germ) -> int:
        vertex = self.kappa(germ)
        same = [g for g in self.polygon_germs(germ.polygon) if self.kappa(g) == vertex]
        return same.index(germ) + 1

    def germ_ref(self, germ: Germ) -> str:
        vertex = self.kappa(germ)
        same = [g for g in self.polygon_germs(germ.polygon) if self.kappa(g) == vertex]
        if len(same) == 1:
            return f"{germ.polygon}.{vertex}"
        return f"{germ.polygon}.{vertex}.{same.index(germ) + 1}"

    def resolve_germ_ref(self, ref: str) -> Germ:

        parts = ref.strip().split('.')
        if len(parts) not in (2, 3):
            raise InputError(f"malformed germ reference {ref!r}")
        polygon, vertex = parts[0], parts[1]
        occurrence = 1
        if len(parts) == 3:
            try:
                occurrence = int(parts[2])
            except ValueError:
                raise InputError(f"malformed occurrence in {ref!r}")
        if polygon not in self._index['polygon_vertices']:
            raise InputError(f"unknown polygon {polygon} in {ref!r}")
        same = [g for g in self.polygon_germs(polygon) if self.kappa(g) == vertex]
        if not same:
            raise InputError(f"polygon {polygon} has no germ at {vertex}")
        if len(same) > 1 and len(parts) == 2:
            raise InputError(f"{ref!r} is ambiguous, add the occurrence number")
        if not 1 <= occurrence <= len(same):
            raise InputError(f"occurrence {occurrence} out of range in {ref!r}")
        return same[occurrence - 1]

    # -- derived configurations -----------------------------------------

    def with_multiplicities(self, changes: Mapping[str, int]) -> 'BrauerConfig':
        for vertex in changes:
            self.multiplicity(vertex)
        return BrauerConfig(
            vertices=tuple((v, changes.get(v, m)) for v, m in self.vertices),
            polygons=self.polygons,
            orders=self.orders
        )

    # -- validation ------------------------------------------------------

    def validate(self, multiplicity_cap: int = DEFAULT_MULTIPLICITY_CAP) -> ConfigDiagnostics:
        return validate(self, multiplicity_cap)

    def require_valid(self, multiplicity_cap: int = DEFAULT_MULTIPLICITY_CAP) -> 'BrauerConfig':
        diagnostics = validate(self, multiplicity_cap)
        if not diagnostics.is_empty:
            summary = "; ".join(d.message for d in diagnostics)
            raise ConfigurationError(f"invalid configuration: {summary}", diagnostics.to_list())
        return self


def validate(cfg: BrauerConfig, multiplicity_cap: int = DEFAULT_MULTIPLICITY_CAP) -> ConfigDiagnostics:

    report = ConfigDiagnostics()

    if not cfg.polygons:
        report.add('no-polygons', "configuration has no polygons")

    seen_vertices = set()
    for vertex, mult in cfg.vertices:
        if vertex in seen_vertices:
            report.add('duplicate-vertex', f"vertex {vertex} declared twice", vertex)
        seen_vertices.add(vertex)
        if mult < 1 or mult > multiplicity_cap:
            report.add('multiplicity-range',
                       f"multiplicity {mult} of {vertex} outside 1..{multiplicity_cap}", vertex)

    seen_polygons = set()
    for polygon, germ_vertices in cfg.polygons:
        if polygon in seen_polygons:
            report.add('duplicate-polygon', f"polygon {polygon} declared twice", polygon)
        seen_polygons.add(polygon)
        if len(germ_vertices) < 2:
            report.add('polygon-too-small', f"polygon {polygon} has fewer than 2 germs", polygon)
        for vertex in germ_vertices:
            if vertex not in seen_vertices:
                report.add('unknown-vertex', f"polygon {polygon} uses undeclared vertex {vertex}",
                           polygon, vertex)

    incident = cfg._index['incident']
    for vertex in seen_vertices:
        if vertex not in incident:
            report.add('isolated-vertex', f"vertex {vertex} has no incident germ", vertex)

    declared_orders = {}
    for vertex, order in cfg.orders:
        if vertex in declared_orders:
            report.add('order-duplicate', f"vertex {vertex} has two order lists", vertex)
            continue
        declared_orders[vertex] = order
        if vertex not in seen_vertices:
            report.add('order-unknown-vertex', f"order given for undeclared vertex {vertex}", vertex)

    for vertex, germs in incident.items():
        order = declared_orders.get(vertex)
        if order is None:
            if len(germs) > 1:
                report.add('order-missing', f"vertex {vertex} of valency {len(germs)} has no order",
                           vertex)
            continue
        listed = list(order)
        if len(set(listed)) != len(listed):
            report.add('order-duplicate', f"order at {vertex} lists a germ twice", vertex)
        for germ in listed:
            if not cfg.has_germ(germ):
                report.add('order-unknown-germ', f"order at {vertex} lists unknown germ {germ}",
                           vertex, str(germ))
            elif cfg.kappa(germ) != vertex:
                report.add('order-foreign-germ',
                           f"order at {vertex} lists germ {germ} of vertex {cfg.kappa(germ)}",
                           vertex, str(germ))
        missing = set(germs) - set(listed)
        if missing:
            report.add('order-incomplete',
                       f"order incomplete at {vertex}: missing {sorted(str(g) for g in missing)}",
                       vertex)

    multiplicity = cfg._index['multiplicity']
    for polygon, germ_vertices in cfg.polygons:
        if len(germ_vertices) <= 2:
            continue
        for vertex in germ_vertices:
            if len(incident.get(vertex, [])) == 1 and multiplicity.get(vertex) == 1:
                report.add('truncation-axiom',
                           f"{len(germ_vertices)}-gon {polygon} has truncated vertex {vertex}",
                           polygon, vertex)

    if not report.is_empty:
        logging.debug(f"configuration diagnostics: {report.codes()}")
    return report


def germ_conservation(cfg: BrauerConfig) -> Tuple[int, int, int]:
    by_vertex = sum(cfg.valency(v) for v in cfg.vertex_ids)
    by_polygon = sum(cfg.polygon_size(x) for x in cfg.polygon_ids)
    return by_vertex, by_polygon, len(cfg.germs())


def step_from_refs(cfg: BrauerConfig, refs: Iterable[str]) -> frozenset:
    return frozenset(cfg.resolve_germ_ref(ref) for ref in refs if ref.strip())
