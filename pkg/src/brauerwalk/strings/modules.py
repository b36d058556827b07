# src/brauerwalk/strings/modules.py

from typing import Dict, List, Optional, Tuple
from enum import Enum
from dataclasses import dataclass

from .words import StringWord, label, vertices_along, zero_string
from ..algebra.quiver import BoundQuiver
from ..algebra.representation import RepDescriptor
from ..core.errors import StringError
from ..oracle.field import DEFAULT_PRIME, zeros


class GlueKind(Enum):
    OVERLAP = ">>"
    REVERSAL = ">>>"


@dataclass(frozen=True)
class Junction:
    kind: GlueKind
    triple: str = ""
    common: int = 0


@dataclass(frozen=True)
class HyperString:
    parts: Tuple[StringWord, ...]
    junctions: Tuple[Junction, ...] = ()

    def __post_init__(self):
        if len(self.junctions) != max(len(self.parts) - 1, 0):
            raise StringError("a hyperstring needs one junction between consecutive parts")

    @property
    def dimension(self) -> int:
        return sum(len(w) + 1 for w in self.parts)


def string_module(quiver: BoundQuiver, w: StringWord, prime: int = DEFAULT_PRIME,
                  name: Optional[str] = None) -> RepDescriptor:

    if not w.is_zero and not quiver.string_avoids_relations(w.symbols):
        raise StringError(f"{label(quiver, w)} is not a string")
    vertex_of = vertices_along(quiver, w)
    n = len(vertex_of)
    matrices = {a: zeros(n, n) for a in quiver.arrows}
    for i, sym in enumerate(w.symbols, start=1):
        if sym.inverse:
            matrices[sym.arrow][i - 1, i] += 1
        else:
            matrices[sym.arrow][i, i - 1] += 1
    labels = tuple(f"b{i}" for i in range(n))
    return RepDescriptor(tuple(vertex_of), matrices, labels, prime, name or f"M({label(quiver, w)})")


def simple_module(quiver: BoundQuiver, vertex: str, prime: int = DEFAULT_PRIME) -> RepDescriptor:
    return string_module(quiver, zero_string(quiver, vertex), prime, f"S({vertex})")


def hyperstring_module(quiver: BoundQuiver, hs: HyperString, prime: int = DEFAULT_PRIME) -> RepDescriptor:
    """Block lower triangular module: string modules on the diagonal, one glue entry per junction."""

    blocks = [string_module(quiver, w, prime) for w in hs.parts]
    module = blocks[0]
    offsets = [0]
    for block in blocks[1:]:
        offsets.append(module.dim)
        module = module.direct_sum(block)

    matrices = {k: m.copy() for k, m in module.matrices.items()}
    for i, junction in enumerate(hs.junctions):
        left, right = hs.parts[i], hs.parts[i + 1]
        if left.is_zero or right.is_zero:
            raise StringError("junctions need non-zero parts")
        n_i = len(left)
        gamma, alpha = left.last, right.first
        if alpha.inverse == gamma.inverse:
            raise StringError(f"junction {i} has no unique gluing symbol")
        if alpha.inverse:
            delta = alpha.arrow
            src, dst = offsets[i] + n_i - 1, offsets[i + 1]
        else:
            delta = gamma.arrow
            src, dst = offsets[i] + n_i, offsets[i + 1] + 1
        arrow = quiver.arrow(delta)
        if module.vertex_of[src] != arrow.source or module.vertex_of[dst] != arrow.target:
            raise StringError(f"junction {i} glue does not match the arrow {arrow.label or delta}")
        matrices[delta][dst, src] = (matrices[delta][dst, src] + 1) % prime

    name = " | ".join(label(quiver, w) for w in hs.parts)
    return RepDescriptor(module.vertex_of, matrices,
                         tuple(f"b{i},{j}" for i, w in enumerate(hs.parts) for j in range(len(w) + 1)),
                         prime, f"M({name})")
