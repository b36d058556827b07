# src/brauerwalk/strings/words.py

from typing import List, Optional, Sequence, Tuple
from dataclasses import dataclass

from ..algebra.quiver import ArrowSymbol, BoundQuiver
from ..core.errors import StringError


@dataclass(frozen=True, order=True)
class StringWord:
    """A word over arrows and formal inverses; zero strings carry an (polygon, side) anchor."""

    symbols: Tuple[ArrowSymbol, ...] = ()
    anchor: Optional[Tuple[str, int]] = None

    def __len__(self) -> int:
        return len(self.symbols)

    @property
    def is_zero(self) -> bool:
        return not self.symbols

    @property
    def first(self) -> ArrowSymbol:
        return self.symbols[0]

    @property
    def last(self) -> ArrowSymbol:
        return self.symbols[-1]

    def __getitem__(self, item):
        return self.symbols[item]


def zero_string(quiver: BoundQuiver, polygon: str, side: int = 1) -> StringWord:
    if polygon not in quiver.vertices:
        raise StringError(f"unknown vertex {polygon}")
    return StringWord((), (polygon, 1 if side >= 0 else -1))


def inverse(w: StringWord) -> StringWord:
    if w.is_zero:
        return StringWord((), (w.anchor[0], -w.anchor[1]))
    return StringWord(tuple(sym.inverted() for sym in reversed(w.symbols)))


def inverse_symbols(symbols: Sequence[ArrowSymbol]) -> Tuple[ArrowSymbol, ...]:
    return tuple(sym.inverted() for sym in reversed(symbols))


def source(quiver: BoundQuiver, w: StringWord) -> str:
    return w.anchor[0] if w.is_zero else quiver.s(w.first)


def target(quiver: BoundQuiver, w: StringWord) -> str:
    return w.anchor[0] if w.is_zero else quiver.t(w.last)


def is_string(quiver: BoundQuiver, symbols: Sequence[ArrowSymbol]) -> bool:
    return quiver.string_avoids_relations(symbols)


def make_string(quiver: BoundQuiver, symbols: Sequence[ArrowSymbol]) -> StringWord:
    symbols = tuple(symbols)
    if not symbols:
        raise StringError("use zero_string for the empty word")
    if not quiver.string_avoids_relations(symbols):
        raise StringError(f"{quiver.word_label(symbols)} is not a string")
    return StringWord(symbols)


def concat(quiver: BoundQuiver, w: StringWord, w2: StringWord) -> Optional[StringWord]:

    if target(quiver, w) != source(quiver, w2):
        return None
    if w.is_zero:
        return w2
    if w2.is_zero:
        return w
    joined = w.symbols + w2.symbols
    if not quiver.string_avoids_relations(joined):
        return None
    return StringWord(joined)


def canonical(w: StringWord) -> StringWord:
    if w.is_zero:
        return StringWord((), (w.anchor[0], 1))
    return min(w, inverse(w))


def label(quiver: BoundQuiver, w: StringWord) -> str:
    if w.is_zero:
        return f"1_{w.anchor[0]}"
    return quiver.word_label(w.symbols)


def vertices_along(quiver: BoundQuiver, w: StringWord) -> List[str]:
    """Vertex of each basis element b_0, ..., b_n of M(w)."""
    if w.is_zero:
        return [w.anchor[0]]
    return [quiver.s(w.first)] + [quiver.t(sym) for sym in w.symbols]


def top_positions(w: StringWord) -> List[int]:
    """Basis positions of M(w) outside the radical."""
    n = len(w)
    return [j for j in range(n + 1)
            if not (j >= 1 and w[j - 1].is_direct) and not (j < n and w[j].inverse)]


def top_vertices(quiver: BoundQuiver, w: StringWord) -> List[str]:
    along = vertices_along(quiver, w)
    return sorted(along[j] for j in top_positions(w))


def all_strings(quiver: BoundQuiver, max_len: int) -> List[StringWord]:
    """Every non-zero string with at most max_len letters, one per inverse pair."""

    letters = sorted(ArrowSymbol(key, inv) for key in quiver.arrows for inv in (False, True))
    found = set()
    frontier = [(sym,) for sym in letters]
    while frontier:
        symbols = frontier.pop()
        found.add(canonical(StringWord(symbols)))
        if len(symbols) >= max_len:
            continue
        for sym in letters:
            candidate = symbols + (sym,)
            if quiver.string_avoids_relations(candidate):
                frontier.append(candidate)
    return sorted(found)
