# src/brauerwalk/strings/clans.py

from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple
from dataclasses import dataclass, field
import logging

import numpy as np

from ..algebra.quiver import Arrow, ArrowSymbol, BoundQuiver, Relation, RelationKind
from ..algebra.representation import RepDescriptor
from ..core.errors import ClanWordOrderError, InputError, StringError
from ..oracle.field import (DEFAULT_PRIME, column_basis, identity, inv_mod_mat, matmul_mod, mod_p,
                            nullspace_mod, rank_mod, zeros)


class ClanQuiver(BoundQuiver):
    """Biquiver: ordinary arrows plus special loops eta with eta^2 = eta."""

    def __init__(self, vertices: Sequence[str], arrows: Iterable[Arrow], special_loops: Iterable[Hashable],
                 relations: Iterable[Relation] = ()):
        arrows = list(arrows)
        self.special_loops = frozenset(special_loops)
        idempotents = [Relation(RelationKind.IDEMPOTENT, ((1, (k, k)), (-1, (k,)))) for k in sorted(self.special_loops)]
        super().__init__(vertices, arrows, list(relations) + idempotents)
        for key in self.special_loops:
            loop = self.arrow(key)
            if loop.source != loop.target:
                raise InputError(f"special loop {key} is not a loop")

    def is_special(self, sym: ArrowSymbol) -> bool:
        return sym.arrow in self.special_loops


@dataclass(frozen=True)
class KxyRep:
    """Representation (K^r, X, Y) of K<x, y> / (x^2 - x, y^2 - y)."""

    X: np.ndarray
    Y: np.ndarray

    @property
    def dim(self) -> int:
        return self.X.shape[0]

    def is_idempotent(self, prime: int) -> bool:
        return (np.array_equal(matmul_mod(self.X, self.X, prime), mod_p(self.X, prime)) and
                np.array_equal(matmul_mod(self.Y, self.Y, prime), mod_p(self.Y, prime)))

    def direct_sum(self, other: 'KxyRep') -> 'KxyRep':
        n, k = self.dim, other.dim
        X, Y = zeros(n + k, n + k), zeros(n + k, n + k)
        X[:n, :n], X[n:, n:] = self.X, other.X
        Y[:n, :n], Y[n:, n:] = self.Y, other.Y
        return KxyRep(X, Y)


@dataclass(frozen=True)
class ClanBandParams:
    """Symmetric clannish band w eta1 w^-1 eta2 together with (V, phi_x, phi_y)."""

    word: Tuple[ArrowSymbol, ...]
    eta1: Hashable
    eta2: Hashable
    phi_x: np.ndarray
    phi_y: np.ndarray

    @property
    def m(self) -> int:
        return self.phi_x.shape[0]

    @classmethod
    def from_rep(cls, word: Sequence[ArrowSymbol], eta1: Hashable, eta2: Hashable, rep: KxyRep) -> 'ClanBandParams':
        return cls(tuple(word), eta1, eta2, rep.X, rep.Y)


def _letter_inverse(clan: ClanQuiver, sym: ArrowSymbol) -> ArrowSymbol:
    return sym if clan.is_special(sym) else sym.inverted()


def band_letters(clan: ClanQuiver, params: ClanBandParams) -> Tuple[ArrowSymbol, ...]:
    """Cyclic letters with eta1 at the start of the word and eta2 at its end."""
    back = tuple(_letter_inverse(clan, sym) for sym in reversed(params.word))
    return (ArrowSymbol(params.eta1),) + params.word + (ArrowSymbol(params.eta2),) + back


def is_proper_power(letters: Sequence[ArrowSymbol]) -> bool:
    n = len(letters)
    for d in range(1, n):
        if n % d == 0 and tuple(letters[:d]) * (n // d) == tuple(letters):
            return True
    return False


def compare_words(clan: ClanQuiver, left: Sequence[ArrowSymbol], right: Sequence[ArrowSymbol]) -> int:
    """+1 if left > right, -1 if left < right; words are compared from their common suffix."""

    i, j = len(left) - 1, len(right) - 1
    while i >= 0 and j >= 0 and left[i] == right[j]:
        i -= 1
        j -= 1
    if i < 0 or j < 0:
        raise ClanWordOrderError("one word is a suffix of the other")
    a, b = left[i], right[j]
    if clan.is_special(a) or clan.is_special(b) or a.inverse == b.inverse:
        raise ClanWordOrderError(f"letters {clan.symbol_label(a)} and {clan.symbol_label(b)} are incomparable")
    return 1 if a.inverse else -1


def validate_band(clan: ClanQuiver, params: ClanBandParams, prime: int = DEFAULT_PRIME) -> None:

    if not params.word:
        raise StringError("the band word needs at least one letter")
    for key in (params.eta1, params.eta2):
        if key not in clan.special_loops:
            raise InputError(f"{key} is not a special loop")
    letters = band_letters(clan, params)
    for a, b in zip(letters, letters[1:] + letters[:1]):
        if clan.t(a) != clan.s(b):
            raise StringError("band letters do not compose")
        if not clan.is_special(a) and b == a.inverted():
            raise StringError("band contains a backtrack")
    ordinary_runs: List[List[ArrowSymbol]] = [[]]
    for sym in params.word:
        if clan.is_special(sym):
            ordinary_runs.append([])
        else:
            ordinary_runs[-1].append(sym)
    for run in ordinary_runs:
        if run and not clan.string_avoids_relations(run):
            raise StringError(f"{clan.word_label(run)} meets a relation")
    if is_proper_power(letters):
        raise StringError("band is a proper power")
    rep = KxyRep(params.phi_x, params.phi_y)
    if params.phi_x.shape != params.phi_y.shape or params.phi_x.shape[0] != params.phi_x.shape[1]:
        raise InputError("phi_x and phi_y must be square of the same size")
    if not rep.is_idempotent(prime):
        raise InputError("phi_x and phi_y must be idempotent")


def clan_band_module(clan: ClanQuiver, params: ClanBandParams, prime: int = DEFAULT_PRIME) -> RepDescriptor:

    validate_band(clan, params, prime)
    w = params.word
    n, m = len(w), params.m
    vertex_at = [clan.s(w[0])] + [clan.t(sym) for sym in w]
    dim = m * (n + 1)
    matrices = {k: zeros(dim, dim) for k in clan.arrows}

    def block(j: int) -> slice:
        return slice(j * m, (j + 1) * m)

    I = identity(m)
    for j, sym in enumerate(w, start=1):
        if clan.is_special(sym):
            R = [_letter_inverse(clan, s) for s in reversed(w[j:])]
            L = list(w[:j - 1])
            target = matrices[sym.arrow]
            if compare_words(clan, R, L) > 0:
                target[block(j), block(j - 1)] += I
                target[block(j), block(j)] += I
            else:
                target[block(j - 1), block(j)] += I
                target[block(j - 1), block(j - 1)] += I
        elif sym.inverse:
            matrices[sym.arrow][block(j - 1), block(j)] += I
        else:
            matrices[sym.arrow][block(j), block(j - 1)] += I

    matrices[params.eta1][block(0), block(0)] += mod_p(params.phi_x, prime)
    matrices[params.eta2][block(n), block(n)] += mod_p(params.phi_y, prime)

    vertex_of = tuple(vertex_at[j] for j in range(n + 1) for _ in range(m))
    labels = tuple(f"c{i},{j}" for j in range(n + 1) for i in range(m))
    module = RepDescriptor(vertex_of, matrices, labels, prime, f"M(band,{m})")
    defects = module.relation_defects(clan)
    if defects:
        raise StringError(f"band module violates {len(defects)} relation(s)")
    return module


# -- rank 2 tube layers ----------------------------------------------------

@dataclass
class TubeLayer:
    r: int
    tube: int
    left: KxyRep
    middle: KxyRep
    right: KxyRep
    g: np.ndarray
    f: np.ndarray

    def is_exact(self, prime: int = DEFAULT_PRIME) -> bool:
        if np.any(matmul_mod(self.f, self.g, prime)):
            return False
        return rank_mod(self.g, prime) == self.r and rank_mod(self.f, prime) == self.r

    def maps_are_homomorphisms(self, prime: int = DEFAULT_PRIME) -> bool:
        for src, dst, F in ((self.left, self.middle, self.g), (self.middle, self.right, self.f)):
            for a, b in ((src.X, dst.X), (src.Y, dst.Y)):
                if not np.array_equal(matmul_mod(F, a, prime), matmul_mod(b, F, prime)):
                    return False
        return True


def _alternating(first: int, r: int) -> List[int]:
    return [first if i % 2 == 0 else 1 - first for i in range(r)]


def layer_rep(r: int, x_first: int, y_first: int, prime: int = DEFAULT_PRIME) -> KxyRep:
    """V^(r) with diagonal x-values and a lower unipotent conjugate of the diagonal y-values."""

    if r == 0:
        return KxyRep(zeros(0, 0), zeros(0, 0))
    xs = _alternating(x_first, r)
    ys = _alternating(y_first, r)
    X = np.diag(np.array(xs, dtype=np.int64))
    E = np.diag(np.array(ys, dtype=np.int64))
    S = identity(r)
    for i in range(r - 1):
        S[i + 1, i] = ys[i] - ys[i + 1]
    S = mod_p(S, prime)
    Y = matmul_mod(matmul_mod(S, E, prime), inv_mod_mat(S, prime), prime)
    return KxyRep(mod_p(X, prime), Y)


def clan_tube_layer(r: int, tube: int = 1, mouth: int = 1, prime: int = DEFAULT_PRIME) -> TubeLayer:
    """Sequence 0 -> V_-^(r) -> V_-^(r-1) + V_+^(r+1) -> V_+^(r) -> 0 in one of the two rank 2 tubes."""

    if r < 1:
        raise InputError("layers start at r = 1")
    if tube not in (1, 2):
        raise InputError("tube must be 1 or 2")
    x_plus = 1 if mouth >= 0 else 0
    y_plus = x_plus if tube == 1 else 1 - x_plus
    x_minus, y_minus = 1 - x_plus, 1 - y_plus

    left = layer_rep(r, x_minus, y_minus, prime)
    right = layer_rep(r, x_plus, y_plus, prime)
    lower = layer_rep(r - 1, x_minus, y_minus, prime)
    upper = layer_rep(r + 1, x_plus, y_plus, prime)
    middle = lower.direct_sum(upper)

    g = zeros(2 * r, r)
    for i in range(r - 1):
        g[i, i] = 1
    for i in range(r):
        g[(r - 1) + 1 + i, i] = 1

    f = zeros(r, 2 * r)
    for i in range(r - 1):
        f[i + 1, i] = 1
    for i in range(r):
        f[i, (r - 1) + i] = prime - 1

    layer = TubeLayer(r, tube, left, middle, right, g, f)
    logging.debug(f"tube {tube} layer r={r}: exact={layer.is_exact(prime)}")
    return layer


def mouth_reps(tube: int, prime: int = DEFAULT_PRIME) -> Tuple[KxyRep, KxyRep]:
    layer = clan_tube_layer(1, tube, 1, prime)
    return layer.left, layer.right


# -- unfolding a special loop ----------------------------------------------

def unfold_special_loop(clan: ClanQuiver, module: RepDescriptor, loop: Hashable, arrow: Hashable,
                        target: BoundQuiver, image_vertex: str, kernel_vertex: str,
                        image_arrow: Hashable, kernel_arrow: Hashable) -> RepDescriptor:
    """Split the vertex of `loop` into im(eta) and ker(eta); `arrow` becomes the pair image_arrow/kernel_arrow."""

    p = module.prime
    u = clan.arrow(loop).source
    hat = clan.arrow(arrow)
    if u not in (hat.source, hat.target):
        raise InputError(f"arrow {arrow} does not touch the loop vertex {u}")
    at_u = module.basis_at(u)
    E = module.matrix(loop)[np.ix_(at_u, at_u)]
    image = column_basis(E, p)
    kernel = nullspace_mod(E, p)
    if image.shape[1] + kernel.shape[1] != len(at_u):
        raise StringError("special loop does not act idempotently")

    T = identity(module.dim)
    T[np.ix_(at_u, at_u)] = np.concatenate([image, kernel], axis=1)
    T_inv = inv_mod_mat(T, p)
    split = image.shape[1]
    vertex_of = list(module.vertex_of)
    for k, idx in enumerate(at_u):
        vertex_of[idx] = image_vertex if k < split else kernel_vertex
    image_idx = at_u[:split]
    kernel_idx = at_u[split:]

    matrices = {}
    for key in clan.arrows:
        if key == loop:
            continue
        conj = matmul_mod(T_inv, matmul_mod(module.matrix(key), T, p), p)
        if key != arrow:
            matrices[key] = conj
            continue
        on_image, on_kernel = conj.copy(), conj.copy()
        if hat.source == u:
            on_image[:, kernel_idx] = 0
            on_kernel[:, image_idx] = 0
        else:
            on_image[kernel_idx, :] = 0
            on_kernel[image_idx, :] = 0
        matrices[image_arrow] = on_image
        matrices[kernel_arrow] = on_kernel

    for key in matrices:
        target.arrow(key)
    return RepDescriptor(tuple(vertex_of), matrices, module.labels, p, f"F{module.name}")
