# src/brauerwalk/walks/tubes.py

from typing import Dict, List, Sequence, Tuple
from enum import Enum
from dataclasses import dataclass
from collections import Counter
import logging

import networkx as nx

from .hyperwalk import WalkReport, WalkStep, periodic_walks
from .resolution import MChiDescriptor, omega_inv
from ..algebra.quiver_algebra import QuiverAlgebra
from ..core.configuration import BrauerConfig
from ..core.errors import ConfigurationError, InputError
from ..strings.words import StringWord, label, vertices_along


class TubeSource(Enum):
    HYPERWALK = "hyperwalk"
    WCHI = "wchi"


@dataclass(frozen=True)
class TubeReport:
    source: TubeSource
    rank: int
    mouth: Tuple[StringWord, ...]
    steps: Tuple[WalkStep, ...] = ()
    classes: Tuple[str, ...] = ()

    def to_dict(self, alg: QuiverAlgebra) -> Dict:
        mouth = []
        for i, w in enumerate(self.mouth):
            composition = vertices_along(alg, w)
            entry = {
                'module': f"S({w.anchor[0]})" if w.is_zero else f"M({label(alg, w)})",
                'composition': composition,
                'dimension_vector': dict(sorted(Counter(composition).items()))
            }
            if self.classes:
                entry['class'] = self.classes[i]
            if self.steps:
                entry['step'] = self.steps[i].refs(alg.cfg)
            mouth.append(entry)
        return {'source': self.source.value, 'rank': self.rank, 'mouth': mouth}


def canonical_rotation(steps: Sequence[WalkStep]) -> Tuple[WalkStep, ...]:
    """Lexicographically least rotation; shift-equivalent walks share it."""
    steps = tuple(steps)
    return min(steps[i:] + steps[:i] for i in range(len(steps)))


def double_stepped(report: WalkReport) -> List[Tuple[WalkStep, ...]]:

    if not report.is_periodic:
        return []
    n = report.period
    classes = []
    for offset in (0, 1):
        seq = []
        i = offset
        while True:
            seq.append(report.steps[i % n])
            i += 2
            if i % n == offset % n:
                break
        rotation = canonical_rotation(seq)
        if rotation not in classes:
            classes.append(rotation)
    return classes


def _mouth(alg: QuiverAlgebra, steps: Sequence[WalkStep]) -> List[MChiDescriptor]:
    return [omega_inv(alg, s) for s in steps]


def enumerate_tubes(alg: QuiverAlgebra) -> List[TubeReport]:
    """Tubes indexed by periodic double-stepped walks.

    The algebra is assumed to be of infinite representation type; only connectivity is checked.
    """

    cfg = alg.cfg
    if not cfg.is_connected():
        raise ConfigurationError("tubes need a connected configuration")
    if alg.exceptional:
        raise InputError("the exceptional configuration has no tubes")

    classes = set()
    for report in periodic_walks(cfg):
        classes.update(double_stepped(report))

    tubes = []
    for steps in sorted(classes):
        mouth = _mouth(alg, steps)
        tubes.append(TubeReport(TubeSource.HYPERWALK, len(steps),
                                tuple(m.word for m in mouth), steps,
                                tuple(m.mclass.value for m in mouth)))
    logging.info(f"found {len(tubes)} tubes with ranks {[t.rank for t in tubes]}")
    return tubes


def classical_tube_ranks(cfg: BrauerConfig) -> List[int]:
    """Double-stepped Green walk periods of a Brauer graph, from the half-edge permutation."""

    if not cfg.is_brauer_graph():
        raise InputError("classical Green walks need a Brauer graph")
    graph = nx.DiGraph()
    for h in cfg.germs():
        other = next(g for g in cfg.polygon_germs(h.polygon) if g != h)
        graph.add_edge(h, cfg.sigma(other))

    ranks = []
    for component in nx.strongly_connected_components(graph):
        n = len(component)
        if n % 2:
            ranks.append(n)
        else:
            ranks.extend([n // 2, n // 2])
    return sorted(ranks)
