# src/brauerwalk/algebra/quiver.py

from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Set, Tuple
from enum import Enum
from dataclasses import dataclass, field

from ..core.errors import InputError


class Direction(Enum):
    DIRECT = "direct"
    INVERSE = "inverse"


class RelationKind(Enum):
    ZERO = "zero"
    EQUAL = "equal"
    TRUNCATED = "truncated"
    IDEMPOTENT = "idempotent"


@dataclass(frozen=True)
class Arrow:
    key: Hashable
    source: str
    target: str
    label: str = ""


@dataclass(frozen=True, order=True)
class ArrowSymbol:
    arrow: Hashable
    inverse: bool = False

    @property
    def direction(self) -> Direction:
        return Direction.INVERSE if self.inverse else Direction.DIRECT

    @property
    def is_direct(self) -> bool:
        return not self.inverse

    def inverted(self) -> 'ArrowSymbol':
        return ArrowSymbol(self.arrow, not self.inverse)


@dataclass(frozen=True)
class Relation:
    """Linear combination of paths; each path lists arrow keys in traversal order."""

    kind: RelationKind
    terms: Tuple[Tuple[int, Tuple[Hashable, ...]], ...]

    def paths(self) -> List[Tuple[Hashable, ...]]:
        return [path for _, path in self.terms]


class BoundQuiver:
    """A quiver with relations; strings are checked against its monomials and binomial terms."""

    def __init__(self, vertices: Sequence[str], arrows: Iterable[Arrow], relations: Iterable[Relation] = ()):
        self.vertices: Tuple[str, ...] = tuple(vertices)
        self.arrows: Dict[Hashable, Arrow] = {}
        for arrow in arrows:
            if arrow.key in self.arrows:
                raise InputError(f"duplicate arrow {arrow.key}")
            if arrow.source not in self.vertices or arrow.target not in self.vertices:
                raise InputError(f"arrow {arrow.key} leaves the vertex set")
            self.arrows[arrow.key] = arrow
        self.relations: List[Relation] = list(relations)
        self._forbidden: Optional[Set[Tuple[Hashable, ...]]] = None

    # -- endpoints -------------------------------------------------------

    def arrow(self, key: Hashable) -> Arrow:
        try:
            return self.arrows[key]
        except KeyError:
            raise InputError(f"unknown arrow {key}")

    def s(self, sym: ArrowSymbol) -> str:
        a = self.arrow(sym.arrow)
        return a.target if sym.inverse else a.source

    def t(self, sym: ArrowSymbol) -> str:
        a = self.arrow(sym.arrow)
        return a.source if sym.inverse else a.target

    def arrows_out(self, vertex: str) -> List[Hashable]:
        return [k for k, a in self.arrows.items() if a.source == vertex]

    def arrows_in(self, vertex: str) -> List[Hashable]:
        return [k for k, a in self.arrows.items() if a.target == vertex]

    def symbol_label(self, sym: ArrowSymbol) -> str:
        a = self.arrow(sym.arrow)
        name = a.label or str(a.key)
        return f"{name}^-1" if sym.inverse else name

    def word_label(self, symbols: Sequence[ArrowSymbol]) -> str:
        return " ".join(self.symbol_label(sym) for sym in symbols)

    # -- relations -------------------------------------------------------

    def forbidden_paths(self) -> Set[Tuple[Hashable, ...]]:
        if self._forbidden is None:
            forbidden = set()
            for rel in self.relations:
                if rel.kind is RelationKind.IDEMPOTENT:
                    continue
                forbidden.update(rel.paths())
            self._forbidden = forbidden
        return self._forbidden

    def path_avoids_relations(self, path: Sequence[Hashable]) -> bool:
        forbidden = self.forbidden_paths()
        if not forbidden:
            return True
        longest = max(len(p) for p in forbidden)
        n = len(path)
        for i in range(n):
            for j in range(i + 1, min(n, i + longest) + 1):
                if tuple(path[i:j]) in forbidden:
                    return False
        return True

    def string_avoids_relations(self, symbols: Sequence[ArrowSymbol]) -> bool:

        for a, b in zip(symbols, symbols[1:]):
            if self.t(a) != self.s(b):
                return False
            if b == a.inverted():
                return False

        for run_is_direct, run in direction_runs(symbols):
            path = [sym.arrow for sym in run]
            if not run_is_direct:
                path.reverse()
            if not self.path_avoids_relations(path):
                return False
        return True


def direction_runs(symbols: Sequence[ArrowSymbol]) -> List[Tuple[bool, List[ArrowSymbol]]]:
    runs: List[Tuple[bool, List[ArrowSymbol]]] = []
    for sym in symbols:
        if runs and runs[-1][0] == sym.is_direct:
            runs[-1][1].append(sym)
        else:
            runs.append((sym.is_direct, [sym]))
    return runs
