# src/brauerwalk/dtriples/hyperstrings.py

from typing import List, Optional, Sequence
from dataclasses import dataclass

from .triples import DTriple
from .wchi import WString, tau_word
from ..algebra.quiver_algebra import QuiverAlgebra
from ..core.errors import StringError
from ..strings.modules import GlueKind, HyperString, Junction
from ..strings.words import StringWord, source, target


@dataclass
class OverlapCheck:
    junction: Optional[Junction]
    common: int = 0
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.junction is not None


def _shared_triple(triples: Sequence[DTriple], y: str, y2: str) -> Optional[DTriple]:
    if y == y2:
        return None
    for d in sorted(triples):
        if {d.y1, d.y2} == {y, y2}:
            return d
    return None


def check_overlap(alg: QuiverAlgebra, triples: Sequence[DTriple],
                  w: StringWord, w2: StringWord) -> OverlapCheck:
    """Whether w >> w2: w = w1 w0 a and w2 = a' w0^-1 w1' across two edges of one D-triple."""

    if w.is_zero or w2.is_zero:
        return OverlapCheck(None, 0, "overlaps need non-zero strings")
    d = _shared_triple(triples, target(alg, w), source(alg, w2))
    if d is None:
        return OverlapCheck(None, 0, f"{target(alg, w)} and {source(alg, w2)} are not the two "
                                     f"truncated edges of one D-triple")

    k = 0
    limit = min(len(w), len(w2)) - 1
    while k < limit and w[len(w) - 2 - k] == w2[1 + k].inverted():
        k += 1
    w1 = w.symbols[:len(w) - 1 - k]
    w1_prime = w2.symbols[1 + k:]

    if not (w1 and w1[-1].is_direct) and not (w1_prime and w1_prime[0].is_direct):
        return OverlapCheck(None, k, "neither side of the common part continues with a direct letter")
    return OverlapCheck(Junction(GlueKind.OVERLAP, d.name, k), k)


def check_reversal(alg: QuiverAlgebra, ws: WString, ws2: WString) -> Optional[Junction]:
    """Whether ws >>> ws2, that is ws2 = mu1 mu2 (ws^-1)."""

    expected = tau_word(alg, ws.reversed())
    if expected.word != ws2.word:
        return None
    return Junction(GlueKind.REVERSAL, ws.target.name, 0)


def overlap_hyperstring(alg: QuiverAlgebra, triples: Sequence[DTriple],
                        parts: Sequence[StringWord]) -> HyperString:
    """Glue consecutive parts, each pair related by >>."""

    junctions: List[Junction] = []
    for i, (w, w2) in enumerate(zip(parts, parts[1:])):
        check = check_overlap(alg, triples, w, w2)
        if not check.ok:
            raise StringError(f"parts {i} and {i + 1} do not overlap: {check.reason}")
        junctions.append(check.junction)
    return HyperString(tuple(parts), tuple(junctions))


def reversal_hyperstring(alg: QuiverAlgebra, ws: WString) -> HyperString:
    partner = tau_word(alg, ws.reversed())
    junction = check_reversal(alg, ws, partner)
    return HyperString((ws.word, partner.word), (junction,))
