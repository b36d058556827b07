# src/brauerwalk/walks/resolution.py

from typing import Dict, List, Optional, Tuple
from enum import Enum
from dataclasses import dataclass, field
from collections import Counter
import logging

from .hyperwalk import StepKind, WalkReport, WalkStep, step_of, walk
from ..algebra.quiver_algebra import QuiverAlgebra
from ..algebra.representation import RepDescriptor
from ..core.errors import InputError, StringError
from ..oracle.field import DEFAULT_PRIME
from ..strings.modules import simple_module, string_module
from ..strings.words import StringWord, label, make_string, vertices_along, zero_string


class MChiClass(Enum):
    M0 = "M0"
    M1 = "M1"
    M2 = "M2"
    M3 = "M3"


_KIND_OF_CLASS = {
    MChiClass.M0: StepKind.G1,
    MChiClass.M1: StepKind.G1,
    MChiClass.M2: StepKind.G2,
    MChiClass.M3: StepKind.G3,
}


@dataclass(frozen=True)
class MChiDescriptor:
    """A module of the distinguished family: S(x), a maximal uniserial quotient, or a V-shaped string."""

    mclass: MChiClass
    word: StringWord
    polygon: Optional[str] = None

    def label(self, alg: QuiverAlgebra) -> str:
        if self.mclass is MChiClass.M0:
            return f"S({self.polygon})"
        return f"M({label(alg, self.word)})"

    def dimension_vector(self, alg: QuiverAlgebra) -> Dict[str, int]:
        return dict(sorted(Counter(vertices_along(alg, self.word)).items()))

    def to_dict(self, alg: QuiverAlgebra) -> Dict:
        return {
            'class': self.mclass.value,
            'module': self.label(alg),
            'composition': vertices_along(alg, self.word),
            'dimension_vector': self.dimension_vector(alg)
        }


def omega_inv(alg: QuiverAlgebra, step: WalkStep) -> MChiDescriptor:

    cfg = alg.cfg
    if step.kind is StepKind.EMPTY:
        raise InputError("the empty set has no module")

    if step.kind is StepKind.G1:
        g = step.germs[0]
        if cfg.is_truncated_vertex(cfg.kappa(g)):
            return MChiDescriptor(MChiClass.M0, zero_string(alg, g.polygon), g.polygon)
        path = alg.cycle_power(g, alg.full_length(g) - 1)
        word = make_string(alg, [alg.direct(a) for a in path])
        return MChiDescriptor(MChiClass.M1, word)

    g, h = step.germs
    if step.kind is StepKind.G2:
        word = make_string(alg, [alg.inverse(g), alg.direct(h)])
        return MChiDescriptor(MChiClass.M2, word)
    word = make_string(alg, [alg.direct(g), alg.inverse(h)])
    return MChiDescriptor(MChiClass.M3, word)


def omega(alg: QuiverAlgebra, m: MChiDescriptor) -> WalkStep:

    cfg = alg.cfg
    w = m.word
    if m.mclass is MChiClass.M0:
        germs = [g for g in cfg.polygon_germs(m.polygon) if cfg.is_truncated_vertex(cfg.kappa(g))]
        if len(germs) != 1:
            raise StringError(f"S({m.polygon}) is not attached to exactly one truncated vertex")
    elif m.mclass is MChiClass.M1:
        if not w.symbols or any(sym.inverse for sym in w.symbols):
            raise StringError("M1 modules come from direct strings")
        if len(w) != alg.full_length(w.first.arrow) - 1:
            raise StringError(f"{label(alg, w)} is not a maximal non-projective uniserial quotient")
        germs = [w.first.arrow]
    else:
        expected = (True, False) if m.mclass is MChiClass.M2 else (False, True)
        if len(w) != 2 or (w[0].inverse, w[1].inverse) != expected:
            raise StringError(f"{label(alg, w)} does not have the shape of a {m.mclass.value} module")
        germs = [w[0].arrow, w[1].arrow]

    step = step_of(cfg, germs)
    if step.kind is not _KIND_OF_CLASS[m.mclass]:
        raise StringError(f"{m.label(alg)} maps to a {step.kind.value} set, not a "
                          f"{_KIND_OF_CLASS[m.mclass].value} step")
    return step


def descriptor_from_word(alg: QuiverAlgebra, w: StringWord) -> MChiDescriptor:
    """Recognise the class of a string module; the result is checked through omega."""

    if w.is_zero:
        m = MChiDescriptor(MChiClass.M0, zero_string(alg, w.anchor[0]), w.anchor[0])
    elif all(sym.is_direct for sym in w.symbols):
        m = MChiDescriptor(MChiClass.M1, w)
    elif len(w) == 2 and w[0].inverse and w[1].is_direct:
        m = MChiDescriptor(MChiClass.M2, w)
    elif len(w) == 2 and w[0].is_direct and w[1].inverse:
        m = MChiDescriptor(MChiClass.M3, w)
    else:
        raise StringError(f"{label(alg, w)} is not in the distinguished module family")
    omega(alg, m)
    return m


def realize(alg: QuiverAlgebra, m: MChiDescriptor, prime: int = DEFAULT_PRIME) -> RepDescriptor:
    if m.mclass is MChiClass.M0:
        return simple_module(alg, m.polygon, prime)
    return string_module(alg, m.word, prime, m.label(alg))


def projective_terms(step: WalkStep) -> Tuple[str, ...]:

    if step.kind is StepKind.G3:
        return tuple(sorted(g.polygon for g in step.germs))
    if step.kind in (StepKind.G1, StepKind.G2):
        return (step.polygon,)
    return ()


@dataclass
class ResolutionTerm:
    index: int
    step: WalkStep
    projectives: Tuple[str, ...]
    module: MChiDescriptor


@dataclass
class ResolutionTrace:
    start: MChiDescriptor
    walk: WalkReport
    terms: List[ResolutionTerm] = field(default_factory=list)
    note: str = ""

    @property
    def periodic(self) -> bool:
        return self.walk.is_periodic

    def projective_sequence(self) -> List[Tuple[str, ...]]:
        return [t.projectives for t in self.terms]

    def to_dict(self, alg: QuiverAlgebra) -> Dict:
        result = {
            'module': self.start.to_dict(alg),
            'periodic': self.periodic,
            'terms': [
                {
                    'index': t.index,
                    'step': t.step.to_dict(alg.cfg),
                    'projective': [f"P({x})" for x in t.projectives],
                    'syzygy': t.module.to_dict(alg)
                }
                for t in self.terms
            ]
        }
        if self.periodic:
            result['period'] = self.walk.period
        if self.note:
            result['note'] = self.note
        return result


def resolution(alg: QuiverAlgebra, m: MChiDescriptor, max_steps: int,
               step_cap: Optional[int] = None) -> ResolutionTrace:

    report = walk(alg.cfg, omega(alg, m), step_cap)
    trace = ResolutionTrace(m, report)
    for i in range(max_steps):
        step = report.step_at(i)
        if step is None:
            trace.note = (f"syzygy {i} is a tree module outside the distinguished family "
                          f"(the walk rejects {[alg.cfg.germ_ref(g) for g in report.rejected]})")
            break
        trace.terms.append(ResolutionTerm(i, step, projective_terms(step), omega_inv(alg, step)))
    logging.info(f"resolution of {m.label(alg)}: {len(trace.terms)} terms, periodic={trace.periodic}")
    return trace


@dataclass
class SyzygyCheck:
    index: int
    cover_matches: bool
    isomorphic: bool
    certainty: str

    @property
    def ok(self) -> bool:
        return self.cover_matches and self.isomorphic


def check_trace(oracle, alg: QuiverAlgebra, trace: ResolutionTrace) -> List[SyzygyCheck]:
    """Recompute every projective term and syzygy of the trace with the oracle."""

    checks = []
    for term, following in zip(trace.terms, trace.terms[1:]):
        M = realize(alg, term.module, oracle.prime)
        cover = oracle.projective_cover(M)
        kernel, _ = oracle.kernel(cover.projective, cover.cover, f"Omega({M.name})")
        verdict = oracle.compare(kernel, realize(alg, following.module, oracle.prime))
        checks.append(SyzygyCheck(term.index, tuple(sorted(cover.summands)) == term.projectives,
                                  verdict.isomorphic, verdict.certainty.value))
    return checks
