# src/brauerwalk/algebra/projectives.py

from typing import Dict, List, Tuple
from dataclasses import dataclass, field
from collections import Counter

from .quiver_algebra import QuiverAlgebra
from .representation import RepDescriptor
from ..core.configuration import Germ
from ..core.errors import InputError
from ..oracle.field import DEFAULT_PRIME, zeros


@dataclass(frozen=True)
class Strand:
    arrow: Germ
    factors: Tuple[str, ...]


@dataclass(frozen=True)
class ProjectiveShape:
    polygon: str
    strands: Tuple[Strand, ...]

    @property
    def dimension(self) -> int:
        return 2 + sum(len(s.factors) for s in self.strands)

    def dimension_vector(self) -> Dict[str, int]:
        counts = Counter({self.polygon: 2})
        for strand in self.strands:
            counts.update(strand.factors)
        return dict(sorted(counts.items()))

    def to_dict(self) -> Dict:
        return {
            'polygon': self.polygon,
            'dimension': self.dimension,
            'strands': [list(s.factors) for s in self.strands]
        }


def build_projective(alg: QuiverAlgebra, x: str) -> ProjectiveShape:

    if x not in alg.vertices:
        raise InputError(f"unknown polygon {x}")
    strands = []
    for g in alg.arrows_out(x):
        path = alg.cycle_power(g, alg.full_length(g) - 1)
        strands.append(Strand(g, tuple(alg.arrow(a).target for a in path)))
    return ProjectiveShape(x, tuple(sorted(strands, key=lambda s: s.arrow)))


def projective_paths(alg: QuiverAlgebra, x: str) -> List[Tuple[Germ, ...]]:
    """Path from e_x to each basis element of projective_module(alg, x), in basis order."""

    shape = build_projective(alg, x)
    paths: List[Tuple[Germ, ...]] = [()]
    for strand in shape.strands:
        for k in range(1, len(strand.factors) + 1):
            paths.append(tuple(alg.cycle_power(strand.arrow, k)))
    if shape.strands:
        first = shape.strands[0].arrow
        paths.append(tuple(alg.cycle_power(first, alg.full_length(first))))
    return paths


def projective_module(alg: QuiverAlgebra, x: str, prime: int = DEFAULT_PRIME) -> RepDescriptor:

    shape = build_projective(alg, x)
    vertex_of = [x]
    labels = [f"e_{x}"]
    for strand in shape.strands:
        for k, v in enumerate(strand.factors, start=1):
            vertex_of.append(v)
            labels.append(f"{alg.arrow(strand.arrow).label}^{k}")
    vertex_of.append(x)
    labels.append(f"soc_{x}")

    n = len(vertex_of)
    socle = n - 1
    matrices = {a: zeros(n, n) for a in alg.arrows}
    position = 1
    for strand in shape.strands:
        L = len(strand.factors) + 1
        arrow = strand.arrow
        current = 0
        for k in range(1, L + 1):
            nxt = position + k - 1 if k < L else socle
            matrices[arrow][nxt, current] = 1
            current = nxt
            arrow = alg.cycle_successor(arrow)
        position += L - 1

    return RepDescriptor(tuple(vertex_of), matrices, tuple(labels), prime, f"P({x})")
