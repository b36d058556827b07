# src/brauerwalk/algebra/representation.py

from typing import Dict, Hashable, List, Optional, Sequence, Tuple
from dataclasses import dataclass, field
from collections import Counter

import numpy as np

from .quiver import BoundQuiver, Relation
from ..oracle.field import DEFAULT_PRIME, chain_mod, mod_p, zeros


@dataclass
class RepDescriptor:
    """Right module over a bound quiver in column-vector form.

    Basis element i sits at vertex_of[i]; matrices[a][j, i] is the coefficient of b_j in b_i * a.
    """

    vertex_of: Tuple[str, ...]
    matrices: Dict[Hashable, np.ndarray]
    labels: Tuple[str, ...] = ()
    prime: int = DEFAULT_PRIME
    name: str = ""

    def __post_init__(self):
        self.vertex_of = tuple(self.vertex_of)
        n = len(self.vertex_of)
        self.matrices = {k: mod_p(m, self.prime).reshape(n, n) for k, m in self.matrices.items()}
        if not self.labels:
            self.labels = tuple(f"b{i}" for i in range(n))

    @classmethod
    def zero(cls, quiver: BoundQuiver, prime: int = DEFAULT_PRIME) -> 'RepDescriptor':
        return cls((), {k: zeros(0, 0) for k in quiver.arrows}, (), prime, "0")

    @property
    def dim(self) -> int:
        return len(self.vertex_of)

    def matrix(self, key: Hashable) -> np.ndarray:
        m = self.matrices.get(key)
        return zeros(self.dim, self.dim) if m is None else m

    def dimension_vector(self) -> Dict[str, int]:
        return dict(sorted(Counter(self.vertex_of).items()))

    def basis_at(self, vertex: str) -> List[int]:
        return [i for i, v in enumerate(self.vertex_of) if v == vertex]

    def act(self, path: Sequence[Hashable]) -> np.ndarray:
        return chain_mod([self.matrix(a) for a in path], self.dim, self.prime)

    def evaluate(self, relation: Relation) -> np.ndarray:
        total = zeros(self.dim, self.dim)
        for coeff, path in relation.terms:
            total = (total + coeff * self.act(path)) % self.prime
        return total

    def relation_defects(self, quiver: BoundQuiver) -> List[Relation]:
        return [rel for rel in quiver.relations if np.any(self.evaluate(rel))]

    def shape_defects(self, quiver: BoundQuiver) -> List[Hashable]:

        bad = []
        src = np.array(self.vertex_of, dtype=object)
        for key, arrow in quiver.arrows.items():
            m = self.matrix(key)
            if not np.any(m):
                continue
            rows, cols = np.nonzero(m)
            if self.dim and (np.any(src[cols] != arrow.source) or np.any(src[rows] != arrow.target)):
                bad.append(key)
        for key in self.matrices:
            if key not in quiver.arrows and np.any(self.matrices[key]):
                bad.append(key)
        return bad

    def is_module_over(self, quiver: BoundQuiver) -> bool:
        return not self.shape_defects(quiver) and not self.relation_defects(quiver)

    def direct_sum(self, other: 'RepDescriptor') -> 'RepDescriptor':

        n, k = self.dim, other.dim
        keys = list(dict.fromkeys(list(self.matrices) + list(other.matrices)))
        matrices = {}
        for key in keys:
            m = zeros(n + k, n + k)
            m[:n, :n] = self.matrix(key)
            m[n:, n:] = other.matrix(key)
            matrices[key] = m
        return RepDescriptor(
            self.vertex_of + other.vertex_of,
            matrices,
            tuple(self.labels) + tuple(other.labels),
            self.prime,
            f"{self.name} + {other.name}"
        )

    def to_dict(self, quiver: Optional[BoundQuiver] = None) -> Dict:
        arrows = {}
        for key, m in self.matrices.items():
            if not np.any(m):
                continue
            label = quiver.arrow(key).label if quiver is not None else str(key)
            arrows[label or str(key)] = [[int(c) for c in row] for row in m]
        return {
            'name': self.name,
            'dimension': self.dim,
            'dimension_vector': self.dimension_vector(),
            'basis': [{'label': l, 'vertex': v} for l, v in zip(self.labels, self.vertex_of)],
            'arrows': arrows
        }
