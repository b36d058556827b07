# src/brauerwalk/algebra/quiver_algebra.py

from typing import Dict, List, Optional, Sequence, Tuple
import logging

from .quiver import Arrow, ArrowSymbol, BoundQuiver, Relation, RelationKind, direction_runs
from ..core.configuration import BrauerConfig, Germ
from ..core.errors import ConfigurationError, InputError


class QuiverAlgebra(BoundQuiver):
    """Brauer configuration algebra: one arrow alpha_g : pi(g) -> pi(sigma g) per non-truncated germ."""

    def __init__(self, cfg: BrauerConfig, arrows: List[Arrow], relations: List[Relation],
                 cycles: Dict[str, Tuple[Germ, ...]], exceptional: bool):
        super().__init__(cfg.polygon_ids, arrows, relations)
        self.cfg = cfg
        self.cycles = cycles
        self.exceptional = exceptional
        self._cycle_of = {g: v for v, cycle in cycles.items() for g in cycle}

    # -- cycle data ------------------------------------------------------

    def cycle_vertex(self, arrow: Germ) -> str:
        try:
            return self._cycle_of[arrow]
        except KeyError:
            raise InputError(f"no arrow at germ {arrow}")

    def cycle_successor(self, arrow: Germ) -> Germ:
        if self.exceptional:
            return arrow
        return self.cfg.sigma(arrow)

    def cycle_predecessor(self, arrow: Germ) -> Germ:
        if self.exceptional:
            return arrow
        return self.cfg.sigma_inv(arrow)

    def full_length(self, arrow: Germ) -> int:
        """Length of the maximal cycle power m(v) * val(v) starting at this arrow."""
        v = self.cycle_vertex(arrow)
        return self.cfg.multiplicity(v) * len(self.cycles[v])

    def cycle_power(self, arrow: Germ, length: int) -> List[Germ]:
        path = []
        for _ in range(length):
            path.append(arrow)
            arrow = self.cycle_successor(arrow)
        return path

    def walk_back(self, arrow: Germ, length: int) -> List[Germ]:
        """The `length` arrows preceding `arrow` on its cycle, in traversal order."""
        path = []
        for _ in range(length):
            arrow = self.cycle_predecessor(arrow)
            path.append(arrow)
        path.reverse()
        return path

    def is_truncated_source(self, arrow: Germ) -> bool:
        return self.cfg.is_truncated_polygon(self.arrow(arrow).source)

    def direct_limit(self, arrow: Germ) -> int:
        L = self.full_length(arrow)
        return L if self.is_truncated_source(arrow) else L - 1

    # -- symbols ---------------------------------------------------------

    def hat_source(self, sym: ArrowSymbol) -> Germ:
        self.arrow(sym.arrow)
        return self.cycle_successor(sym.arrow) if sym.inverse else sym.arrow

    def hat_target(self, sym: ArrowSymbol) -> Germ:
        self.arrow(sym.arrow)
        return sym.arrow if sym.inverse else self.cycle_successor(sym.arrow)

    def direct(self, germ: Germ) -> ArrowSymbol:
        self.arrow(germ)
        return ArrowSymbol(germ, False)

    def inverse(self, germ: Germ) -> ArrowSymbol:
        self.arrow(germ)
        return ArrowSymbol(germ, True)

    def parse_symbol(self, ref: str) -> ArrowSymbol:
        text = ref.strip()
        inverse = text.endswith("^-1")
        if inverse:
            text = text[:-3]
        germ = self.cfg.resolve_germ_ref(text)
        if germ not in self.arrows:
            raise InputError(f"{ref!r} names a germ without an arrow")
        return ArrowSymbol(germ, inverse)

    def parse_word(self, text: str) -> List[ArrowSymbol]:
        return [self.parse_symbol(tok) for tok in text.replace(",", " ").split()]

    # -- relations -------------------------------------------------------

    def run_is_legal(self, path: Sequence[Germ]) -> bool:
        for a, b in zip(path, path[1:]):
            if b != self.cycle_successor(a):
                return False
        n = len(path)
        for i, a in enumerate(path):
            if n - i > self.direct_limit(a):
                return False
        return True

    def string_avoids_relations(self, symbols: Sequence[ArrowSymbol]) -> bool:

        for a, b in zip(symbols, symbols[1:]):
            if self.t(a) != self.s(b) or b == a.inverted():
                return False
        for run_is_direct, run in direction_runs(symbols):
            path = [sym.arrow for sym in run]
            if not run_is_direct:
                path.reverse()
            if not self.run_is_legal(path):
                return False
        return True

    def arrows_in_order(self) -> List[Germ]:
        return sorted(self.arrows)

    def summary(self) -> Dict:
        kinds: Dict[str, int] = {}
        for rel in self.relations:
            kinds[rel.kind.value] = kinds.get(rel.kind.value, 0) + 1
        return {
            'vertices': list(self.vertices),
            'arrows': [
                {'id': self.arrows[a].label, 'source': self.arrows[a].source,
                 'target': self.arrows[a].target, 'cycle': self.cycle_vertex(a)}
                for a in self.arrows_in_order()
            ],
            'cycles': {v: [self.arrows[a].label for a in cycle] for v, cycle in sorted(self.cycles.items())},
            'relations': kinds,
            'exceptional': self.exceptional
        }


def build_algebra(cfg: BrauerConfig, multiplicity_cap: int = 16) -> QuiverAlgebra:

    diagnostics = cfg.validate(multiplicity_cap)
    if not diagnostics.is_empty:
        raise ConfigurationError("cannot build the algebra of an invalid configuration",
                                 diagnostics.to_list())

    if cfg.is_exceptional():
        polygon = cfg.polygon_ids[0]
        loop = Germ(polygon, 0)
        arrows = [Arrow(loop, polygon, polygon, cfg.germ_ref(loop))]
        relations = [Relation(RelationKind.TRUNCATED, ((1, (loop, loop)),))]
        logging.info(f"exceptional configuration {polygon}: algebra K[x]/(x^2)")
        return QuiverAlgebra(cfg, arrows, relations, {cfg.kappa(loop): (loop,)}, True)

    arrows = []
    cycles: Dict[str, Tuple[Germ, ...]] = {}
    for v in cfg.vertex_ids:
        if cfg.is_truncated_vertex(v):
            continue
        order = cfg.order(v)
        cycles[v] = order
        for g in order:
            arrows.append(Arrow(g, g.polygon, cfg.sigma(g).polygon, cfg.germ_ref(g)))
    arrows.sort(key=lambda a: a.key)

    by_source: Dict[str, List[Germ]] = {}
    for a in arrows:
        by_source.setdefault(a.source, []).append(a.key)
    by_target: Dict[str, List[Germ]] = {}
    for a in arrows:
        by_target.setdefault(a.target, []).append(a.key)

    relations: List[Relation] = []

    for a in arrows:
        for b in by_source.get(a.target, []):
            if b != cfg.sigma(a.key):
                relations.append(Relation(RelationKind.ZERO, ((1, (a.key, b)),)))

    def power(g: Germ) -> Tuple[Germ, ...]:
        path, h = [], g
        for _ in range(cfg.multiplicity(cfg.kappa(g)) * cfg.valency(cfg.kappa(g))):
            path.append(h)
            h = cfg.sigma(h)
        return tuple(path)

    for x in cfg.polygon_ids:
        out = by_source.get(x, [])
        if cfg.is_truncated_polygon(x):
            for g in out:
                full = power(g)
                relations.append(Relation(RelationKind.TRUNCATED, ((1, full + (g,)),)))
            continue
        for i, g in enumerate(out):
            for h in out[i + 1:]:
                relations.append(Relation(RelationKind.EQUAL, ((1, power(g)), (-1, power(h)))))

    algebra = QuiverAlgebra(cfg, arrows, relations, cycles, False)
    logging.info(f"built algebra: {len(cfg.polygon_ids)} vertices, {len(arrows)} arrows, "
                 f"{len(relations)} relations")
    return algebra
