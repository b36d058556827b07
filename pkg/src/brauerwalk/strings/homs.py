# src/brauerwalk/strings/homs.py

from typing import Dict, List, Optional, Tuple
from dataclasses import dataclass

import numpy as np

from .modules import string_module
from .words import StringWord, inverse_symbols, vertices_along
from ..algebra.quiver import BoundQuiver
from ..oracle.field import column_basis, in_column_space, matmul_mod, mod_p, rank_mod, zeros


@dataclass(frozen=True, order=True)
class Span:
    start: int
    length: int

    @property
    def stop(self) -> int:
        return self.start + self.length


@dataclass(frozen=True, order=True)
class AdmissiblePair:
    factor: Span
    image: Span
    flip: bool = False

    def to_dict(self) -> Dict:
        return {
            'factor': [self.factor.start, self.factor.length],
            'image': [self.image.start, self.image.length],
            'flip': self.flip
        }


def factor_spans(w: StringWord) -> List[Span]:

    n = len(w)
    spans = []
    for a in range(n + 1):
        if a > 0 and w[a - 1].is_direct:
            continue
        for b in range(a, n + 1):
            if b == n or w[b].is_direct:
                spans.append(Span(a, b - a))
    return spans


def image_spans(w: StringWord) -> List[Span]:

    n = len(w)
    spans = []
    for c in range(n + 1):
        if c > 0 and w[c - 1].inverse:
            continue
        for d in range(c, n + 1):
            if d == n or w[d].inverse:
                spans.append(Span(c, d - c))
    return spans


def hom_basis(quiver: BoundQuiver, w: StringWord, w2: StringWord) -> List[AdmissiblePair]:
    """Admissible pairs indexing a basis of Hom(M(w), M(w2))."""

    verts = vertices_along(quiver, w)
    verts2 = vertices_along(quiver, w2)
    images = image_spans(w2)
    pairs = []
    for f in factor_spans(w):
        content = w.symbols[f.start:f.stop]
        flipped = inverse_symbols(content)
        for g in images:
            if g.length != f.length:
                continue
            if f.length == 0:
                if verts[f.start] == verts2[g.start]:
                    pairs.append(AdmissiblePair(f, g, False))
                continue
            image_content = w2.symbols[g.start:g.stop]
            if image_content == content:
                pairs.append(AdmissiblePair(f, g, False))
            if image_content == flipped:
                pairs.append(AdmissiblePair(f, g, True))
    return sorted(pairs)


def pair_matrix(w: StringWord, w2: StringWord, pair: AdmissiblePair) -> np.ndarray:
    F = zeros(len(w2) + 1, len(w) + 1)
    for t in range(pair.factor.length + 1):
        row = pair.image.stop - t if pair.flip else pair.image.start + t
        F[row, pair.factor.start + t] = 1
    return F


def _flat(F: np.ndarray) -> np.ndarray:
    return F.reshape(-1)


def projective_factoring_space(oracle, w: StringWord, w2: StringWord) -> np.ndarray:
    """Columns span the maps M(w) -> M(w2) factoring through the projective cover of M(w2)."""

    M = string_module(oracle.quiver, w, oracle.prime)
    N = string_module(oracle.quiver, w2, oracle.prime)
    cover = oracle.projective_cover(N)
    maps = [matmul_mod(cover.cover, g, oracle.prime) for g in oracle.hom_space(M, cover.projective)]
    maps = [_flat(F) for F in maps if np.any(F)]
    if not maps:
        return zeros(M.dim * N.dim, 0)
    return column_basis(np.stack(maps, axis=1), oracle.prime)


def stable_hom_basis(oracle, w: StringWord, w2: StringWord) -> List[AdmissiblePair]:
    """Admissible pairs independent modulo maps factoring through projectives."""

    p = oracle.prime
    unstable = projective_factoring_space(oracle, w, w2)
    chosen = unstable
    stable = []
    for pair in hom_basis(oracle.quiver, w, w2):
        v = _flat(pair_matrix(w, w2, pair))
        if in_column_space(chosen, v, p):
            continue
        chosen = np.column_stack([chosen, v]) if chosen.shape[1] else v.reshape(-1, 1)
        stable.append(pair)
    return stable


def stable_hom_dimension(oracle, w: StringWord, w2: StringWord) -> int:
    M = string_module(oracle.quiver, w, oracle.prime)
    N = string_module(oracle.quiver, w2, oracle.prime)
    total = oracle.hom_dimension(M, N)
    return total - projective_factoring_space(oracle, w, w2).shape[1]
