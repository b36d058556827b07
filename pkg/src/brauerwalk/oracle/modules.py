# src/brauerwalk/oracle/modules.py

from typing import Dict, List, Optional, Tuple
from enum import Enum
from dataclasses import dataclass, field
import itertools
import logging
import math

import numpy as np

from .field import (column_basis, complement_basis, det_mod, identity, is_nilpotent, matmul_mod,
                    mod_p, nullspace_mod, rank_mod, solve_mod, zeros)
from ..algebra.projectives import projective_module, projective_paths
from ..algebra.quiver import BoundQuiver
from ..algebra.quiver_algebra import QuiverAlgebra
from ..algebra.representation import RepDescriptor
from ..core.errors import OracleError
from ..core.settings import WalkerConfig


class Certainty(Enum):
    EXACT = "exact"
    RANDOMIZED = "randomized-certified"
    UNVERIFIED = "unverified"


@dataclass
class IsoVerdict:
    isomorphic: bool
    certainty: Certainty
    hom_dimension: int = 0
    reason: str = ""

    def __bool__(self) -> bool:
        return self.isomorphic

    def to_dict(self) -> Dict:
        return {
            'isomorphic': self.isomorphic,
            'certainty': self.certainty.value,
            'hom_dimension': self.hom_dimension,
            'reason': self.reason
        }


@dataclass
class OracleModule:
    rep: RepDescriptor
    radical: np.ndarray
    top: Dict[str, np.ndarray] = field(default_factory=dict)


@dataclass
class CoverResult:
    projective: RepDescriptor
    cover: np.ndarray
    summands: List[str]


class SyzygyOracle:
    """Exact module computations over GF(p) for a bound quiver."""

    def __init__(self, quiver: BoundQuiver, config: Optional[WalkerConfig] = None):
        self.quiver = quiver
        self.config = config or WalkerConfig()
        self.prime = self.config.prime
        self.rng = np.random.default_rng(self.config.seed)

    # -- Hom spaces ------------------------------------------------------

    def hom_space(self, M: RepDescriptor, N: RepDescriptor) -> List[np.ndarray]:
        """Basis of Hom(M, N) as dim N x dim M matrices F with F A^M = A^N F."""

        p = self.prime
        dm, dn = M.dim, N.dim
        if dm == 0 or dn == 0:
            return []

        index = -np.ones((dn, dm), dtype=np.int64)
        count = 0
        for v in set(M.vertex_of) & set(N.vertex_of):
            rows = np.array(N.basis_at(v))
            cols = np.array(M.basis_at(v))
            block = np.arange(count, count + rows.size * cols.size).reshape(rows.size, cols.size)
            index[np.ix_(rows, cols)] = block
            count += rows.size * cols.size
        if count == 0:
            return []

        equations = []
        for key, arrow in self.quiver.arrows.items():
            n_t = np.array(N.basis_at(arrow.target), dtype=np.int64)
            m_s = np.array(M.basis_at(arrow.source), dtype=np.int64)
            if n_t.size == 0 or m_s.size == 0:
                continue
            AN = N.matrix(key)
            AM = M.matrix(key)
            E = zeros(n_t.size * m_s.size, count)
            eq = (np.arange(n_t.size)[:, None] * m_s.size + np.arange(m_s.size)[None, :])

            for k in N.basis_at(arrow.source):
                coeff = AN[n_t, k]
                if not np.any(coeff):
                    continue
                unknowns = index[k, m_s]
                np.add.at(E, (eq, np.broadcast_to(unknowns[None, :], eq.shape)),
                          np.broadcast_to(coeff[:, None], eq.shape))

            for k in M.basis_at(arrow.target):
                coeff = AM[k, m_s]
                if not np.any(coeff):
                    continue
                unknowns = index[n_t, k]
                np.add.at(E, (eq, np.broadcast_to(unknowns[:, None], eq.shape)),
                          np.broadcast_to(-coeff[None, :], eq.shape))

            E = mod_p(E, p)
            if np.any(E):
                equations.append(E[np.any(E, axis=1)])

        system = np.concatenate(equations, axis=0) if equations else zeros(0, count)
        basis = nullspace_mod(system, p)
        rows, cols = np.nonzero(index >= 0)
        homs = []
        for j in range(basis.shape[1]):
            F = zeros(dn, dm)
            F[rows, cols] = basis[index[rows, cols], j]
            homs.append(F)
        return homs

    def hom_dimension(self, M: RepDescriptor, N: RepDescriptor) -> int:
        return len(self.hom_space(M, N))

    def is_homomorphism(self, M: RepDescriptor, N: RepDescriptor, F: np.ndarray) -> bool:
        p = self.prime
        for key in self.quiver.arrows:
            if np.any((matmul_mod(F, M.matrix(key), p) - matmul_mod(N.matrix(key), F, p)) % p):
                return False
        return True

    # -- radical, top and covers -----------------------------------------

    def analyse(self, M: RepDescriptor) -> OracleModule:

        images = [M.matrix(k) for k in self.quiver.arrows]
        radical = column_basis(np.concatenate(images, axis=1), self.prime) if images and M.dim else zeros(M.dim, 0)
        top = {}
        for v in sorted(set(M.vertex_of)):
            at_v = M.basis_at(v)
            R_v = radical[at_v, :] if radical.shape[1] else zeros(len(at_v), 0)
            R_v = R_v[:, np.any(R_v, axis=0)] if R_v.shape[1] else R_v
            local = complement_basis(R_v, len(at_v), self.prime)
            gens = zeros(M.dim, local.shape[1])
            gens[at_v, :] = local
            top[v] = gens
        return OracleModule(M, radical, top)

    def projective_cover(self, M: RepDescriptor) -> CoverResult:

        if not isinstance(self.quiver, QuiverAlgebra):
            raise OracleError("projective covers need a Brauer configuration algebra")
        alg = self.quiver
        info = self.analyse(M)
        parts: List[RepDescriptor] = []
        blocks: List[np.ndarray] = []
        summands: List[str] = []
        for v, gens in info.top.items():
            for j in range(gens.shape[1]):
                m = gens[:, j]
                P = projective_module(alg, v, self.prime)
                paths = projective_paths(alg, v)
                block = np.column_stack([matmul_mod(M.act(path), m.reshape(-1, 1), self.prime).reshape(-1)
                                         for path in paths])
                parts.append(P)
                blocks.append(block)
                summands.append(v)

        if not parts:
            return CoverResult(RepDescriptor.zero(alg, self.prime), zeros(M.dim, 0), [])
        P = parts[0]
        for extra in parts[1:]:
            P = P.direct_sum(extra)
        P.name = " + ".join(f"P({v})" for v in summands)
        cover = np.concatenate(blocks, axis=1)
        if rank_mod(cover, self.prime) != M.dim:
            raise OracleError(f"projective cover of {M.name or 'module'} is not surjective")
        return CoverResult(P, cover, summands)

    def kernel(self, M: RepDescriptor, F: np.ndarray, name: str = "") -> Tuple[RepDescriptor, np.ndarray]:
        """Kernel of F: M -> N as a representation, with its inclusion into M."""

        p = self.prime
        columns = []
        vertex_of = []
        for v in sorted(set(M.vertex_of)):
            at_v = M.basis_at(v)
            K = nullspace_mod(F[:, at_v], p) if F.shape[0] else identity(len(at_v))
            for j in range(K.shape[1]):
                col = zeros(M.dim, 1).reshape(-1)
                col[at_v] = K[:, j]
                columns.append(col)
                vertex_of.append(v)
        if not columns:
            return RepDescriptor((), {k: zeros(0, 0) for k in self.quiver.arrows}, (), p, name), zeros(M.dim, 0)
        inclusion = np.column_stack(columns)
        matrices = {}
        for key in self.quiver.arrows:
            image = matmul_mod(M.matrix(key), inclusion, p)
            matrices[key] = solve_mod(inclusion, image, p) if np.any(image) else zeros(len(columns), len(columns))
        labels = tuple(f"k{i}" for i in range(len(columns)))
        return RepDescriptor(tuple(vertex_of), matrices, labels, p, name), inclusion

    def syzygy(self, M: RepDescriptor) -> RepDescriptor:
        if M.dim == 0:
            return M
        cover = self.projective_cover(M)
        omega, _ = self.kernel(cover.projective, cover.cover, f"Omega({M.name})")
        return omega

    def syzygy_power(self, M: RepDescriptor, i: int) -> RepDescriptor:
        current = M
        for _ in range(i):
            current = self.syzygy(current)
        return current

    # -- isomorphism -----------------------------------------------------

    def _trials(self, degree: int) -> int:
        ratio = self.prime / max(degree, 1)
        return max(1, math.ceil(self.config.certification_bits / math.log2(ratio)))

    def compare(self, M: RepDescriptor, N: RepDescriptor) -> IsoVerdict:

        if M.dimension_vector() != N.dimension_vector():
            return IsoVerdict(False, Certainty.EXACT, 0, "dimension vectors differ")
        if M.dim == 0:
            return IsoVerdict(True, Certainty.EXACT, 0, "zero modules")

        homs = self.hom_space(M, N)
        h = len(homs)
        if h == 0:
            return IsoVerdict(False, Certainty.EXACT, 0, "no homomorphisms")
        if M.dim > self.config.dimension_cap:
            agree = h == self.hom_dimension(M, M) == self.hom_dimension(N, N)
            return IsoVerdict(agree, Certainty.UNVERIFIED, h, "dimension cap exceeded")

        if h != self.hom_dimension(M, M) or h != self.hom_dimension(N, M):
            return IsoVerdict(False, Certainty.EXACT, h, "hom dimensions differ from End")

        for F in homs:
            if det_mod(F, self.prime):
                return IsoVerdict(True, Certainty.EXACT, h, "invertible basis map")

        stack = np.stack(homs)
        d = M.dim
        for _ in range(self._trials(d)):
            t = self.rng.integers(0, self.prime, size=h)
            F = mod_p(np.tensordot(t, stack, axes=1), self.prime)
            if det_mod(F, self.prime):
                return IsoVerdict(True, Certainty.EXACT, h, "invertible combination")

        if h <= self.config.exact_hom_threshold:
            if self.grid_combination(stack) is not None:
                return IsoVerdict(True, Certainty.EXACT, h, "invertible grid combination")
            return IsoVerdict(False, Certainty.EXACT, h, "determinant vanishes on the grid")
        return IsoVerdict(False, Certainty.RANDOMIZED, h, "determinant vanished on every trial")

    def grid_combination(self, stack: np.ndarray) -> Optional[np.ndarray]:
        """An invertible combination of the stacked square matrices, or None if every one is singular."""

        h, d = stack.shape[0], stack.shape[1]
        # det(sum t_i B_i) is homogeneous of degree d: it vanishes identically iff it does at t_1 = 1
        for point in itertools.product(range(d + 1), repeat=h - 1):
            t = np.array((1,) + point, dtype=np.int64)
            F = mod_p(np.tensordot(t, stack, axes=1), self.prime)
            if det_mod(F, self.prime):
                return F
        return None

    def is_isomorphic(self, M: RepDescriptor, N: RepDescriptor) -> bool:
        verdict = self.compare(M, N)
        logging.debug(f"iso {M.name} ~ {N.name}: {verdict.isomorphic} ({verdict.certainty.value})")
        return verdict.isomorphic

    # -- endomorphism ring -----------------------------------------------

    def end_ring_is_local(self, M: RepDescriptor) -> bool:

        if M.dim > self.config.dimension_cap:
            raise OracleError(f"module of dimension {M.dim} exceeds the cap {self.config.dimension_cap}")
        if M.dim == 0:
            return False
        p = self.prime
        basis = self.hom_space(M, M)
        inv_dim = pow(M.dim, p - 2, p)
        nilpotents = []
        for B in basis:
            lam = (int(np.trace(B)) % p) * inv_dim % p
            N = mod_p(B - lam * identity(M.dim), p)
            if not is_nilpotent(N, p):
                return False
            if np.any(N):
                nilpotents.append(N)

        power = nilpotents
        rounds = 0
        while power:
            rounds += 1
            if rounds > M.dim:
                return False
            products = [matmul_mod(A, B, p) for A in power for B in nilpotents]
            products = [X for X in products if np.any(X)]
            if not products:
                return True
            flat = np.stack([X.reshape(-1) for X in products], axis=1)
            span = column_basis(flat, p)
            power = [span[:, j].reshape(M.dim, M.dim) for j in range(span.shape[1])]
        return True

    # -- exact sequences -------------------------------------------------

    def find_surjection(self, E: RepDescriptor, N: RepDescriptor, attempts: int = 8) -> Optional[np.ndarray]:

        homs = self.hom_space(E, N)
        if not homs:
            return None
        stack = np.stack(homs)
        for _ in range(attempts):
            t = self.rng.integers(0, self.prime, size=len(homs))
            F = mod_p(np.tensordot(t, stack, axes=1), self.prime)
            if rank_mod(F, self.prime) == N.dim:
                return F
        return None

    def verify_middle_term(self, E: RepDescriptor, left: RepDescriptor, right: RepDescriptor,
                           retries: int = 4) -> IsoVerdict:
        """Certify 0 -> left -> E -> right -> 0 by finding a surjection E -> right with kernel ~ left."""

        if E.dim != left.dim + right.dim:
            return IsoVerdict(False, Certainty.EXACT, 0, "dimensions do not add up")
        verdict = IsoVerdict(False, Certainty.RANDOMIZED, 0, "no surjection found")
        for _ in range(retries):
            F = self.find_surjection(E, right)
            if F is None:
                break
            K, inclusion = self.kernel(E, F, f"ker({E.name})")
            if np.any(matmul_mod(F, inclusion, self.prime)):
                raise OracleError("kernel inclusion does not compose to zero")
            verdict = self.compare(K, left)
            if verdict.isomorphic:
                return verdict
        return verdict
