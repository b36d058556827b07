# src/brauerwalk/dtriples/triples.py

from typing import Dict, List, Optional
from dataclasses import dataclass, field
import itertools

from ..core.configuration import BrauerConfig, Germ
from ..core.errors import InputError


@dataclass(frozen=True, order=True)
class DTriple:
    """A 3-gon x with truncated edges y1, y2 hanging off two of its valency-2 vertices."""

    x: str
    y1: str
    y2: str
    g1: Germ = field(compare=False)
    g2: Germ = field(compare=False)
    g0: Germ = field(compare=False)

    @property
    def name(self) -> str:
        return f"({self.x},{self.y1},{self.y2})"

    def swapped(self) -> 'DTriple':
        return DTriple(self.x, self.y2, self.y1, self.g2, self.g1, self.g0)

    def to_dict(self) -> Dict:
        return {'x': self.x, 'y1': self.y1, 'y2': self.y2}


def _hangs_truncated_edge(cfg: BrauerConfig, germ: Germ) -> Optional[str]:

    vertex = cfg.kappa(germ)
    if cfg.valency(vertex) != 2 or cfg.multiplicity(vertex) != 1:
        return None
    edge = cfg.sigma(germ).polygon
    if edge == germ.polygon or not cfg.is_truncated_edge(edge):
        return None
    return edge


def find_dtriples(cfg: BrauerConfig) -> List[DTriple]:

    triples = []
    for x in cfg.polygon_ids:
        if cfg.polygon_size(x) != 3 or cfg.is_self_folded(x):
            continue
        germs = cfg.polygon_germs(x)
        for g1, g2 in itertools.permutations(germs, 2):
            y1 = _hangs_truncated_edge(cfg, g1)
            y2 = _hangs_truncated_edge(cfg, g2)
            if y1 is None or y2 is None or y1 == y2:
                continue
            g0 = next(g for g in germs if g not in (g1, g2))
            triples.append(DTriple(x, y1, y2, g1, g2, g0))
    return sorted(triples)


def dtriple_conflicts(triples: List[DTriple]) -> List[str]:
    """Truncated edges that are the first edge of more than one D-triple."""
    seen: Dict[str, List[DTriple]] = {}
    for d in sorted(triples):
        seen.setdefault(d.y1, []).append(d)
    return [f"{y1} is the first edge of " + ", ".join(d.name for d in ds)
            for y1, ds in sorted(seen.items()) if len(ds) > 1]


def triples_by_first_edge(triples: List[DTriple]) -> Dict[str, DTriple]:
    """The D-triple of each truncated edge y1; a 3-gon with three truncated edges is ambiguous."""
    conflicts = dtriple_conflicts(triples)
    if conflicts:
        raise InputError("ambiguous D-triples: " + "; ".join(conflicts))
    return {d.y1: d for d in triples}
