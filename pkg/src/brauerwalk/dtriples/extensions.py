# src/brauerwalk/dtriples/extensions.py

from typing import Dict, List, Optional, Sequence, Tuple
from enum import Enum
from dataclasses import dataclass, field
from collections import Counter
import logging

from .hyperstrings import check_overlap, reversal_hyperstring
from .triples import DTriple, find_dtriples, triples_by_first_edge
from .wchi import WString, wstring_problem, mu1, mu2, tau_word
from ..algebra.quiver import ArrowSymbol
from ..algebra.quiver_algebra import QuiverAlgebra
from ..algebra.representation import RepDescriptor
from ..core.errors import BrauerWalkError, StringError
from ..strings.homs import AdmissiblePair, Span, stable_hom_basis
from ..strings.modules import HyperString, hyperstring_module, string_module
from ..strings.words import StringWord, inverse_symbols, label


class ExtensionClass(Enum):
    SHIFTED = "A1"
    FLIPPED = "A2"
    SELF_OVERLAP = "A3"
    IDENTITY = "A4"
    OVERLAPPING = "overlapping"
    ANOMALY = "anomaly"


@dataclass
class Pieces:
    """w = w1 w_plus w2 w_minus w3, the two spans ordered by position."""

    w1: Tuple[ArrowSymbol, ...]
    w_plus: Tuple[ArrowSymbol, ...]
    w2: Tuple[ArrowSymbol, ...]
    w_minus: Tuple[ArrowSymbol, ...]
    w3: Tuple[ArrowSymbol, ...]


@dataclass
class ExtensionTerm:
    pair: AdmissiblePair
    eclass: ExtensionClass
    summands: Tuple[WString, ...] = ()
    hyperstring: Optional[HyperString] = None
    note: str = ""

    @property
    def has_middle(self) -> bool:
        return bool(self.summands) or self.hyperstring is not None

    def middle_dimension(self) -> int:
        if self.hyperstring is not None:
            return self.hyperstring.dimension
        return sum(len(s.word) + 1 for s in self.summands)

    def middle_label(self, alg: QuiverAlgebra) -> str:
        if self.hyperstring is not None:
            parts = [label(alg, w) for w in self.hyperstring.parts]
            glue = [j.kind.value for j in self.hyperstring.junctions]
            text = parts[0]
            for g, p in zip(glue, parts[1:]):
                text += f" {g} {p}"
            return f"M({text})"
        return " + ".join(f"M({s.label(alg)})" for s in self.summands)

    def to_dict(self, alg: QuiverAlgebra) -> Dict:
        result = {'pair': self.pair.to_dict(), 'class': self.eclass.value}
        if self.has_middle:
            result['middle'] = self.middle_label(alg)
            result['middle_dimension'] = self.middle_dimension()
        if self.note:
            result['note'] = self.note
        return result


@dataclass
class ExtensionReport:
    word: WString
    tau: WString
    stable_dimension: int
    terms: List[ExtensionTerm] = field(default_factory=list)

    def counts(self) -> Dict[str, int]:
        counter = Counter(t.eclass.value for t in self.terms)
        return {c.value: counter.get(c.value, 0) for c in ExtensionClass}

    @property
    def anomalies(self) -> List[ExtensionTerm]:
        return [t for t in self.terms
                if t.eclass in (ExtensionClass.ANOMALY, ExtensionClass.OVERLAPPING) or t.note]

    def to_dict(self, alg: QuiverAlgebra) -> Dict:
        return {
            'word': self.word.to_dict(alg),
            'tau': self.tau.label(alg),
            'stable_dimension': self.stable_dimension,
            'counts': self.counts(),
            'terms': [t.to_dict(alg) for t in self.terms]
        }


def split_pieces(w: StringWord, pair: AdmissiblePair) -> Optional[Pieces]:
    """None when the two spans share letters."""

    first, second = sorted([pair.factor, pair.image])
    if first.stop > second.start:
        return None
    s = w.symbols
    return Pieces(s[:first.start], s[first.start:first.stop], s[first.stop:second.start],
                  s[second.start:second.stop], s[second.stop:])


def classify_pair(w: StringWord, pair: AdmissiblePair) -> ExtensionClass:

    whole = Span(0, len(w))
    if pair.factor == whole and pair.image == whole and not pair.flip:
        return ExtensionClass.IDENTITY
    pieces = split_pieces(w, pair)
    if pieces is None:
        return ExtensionClass.OVERLAPPING
    if not pair.flip:
        return ExtensionClass.SHIFTED
    if not pieces.w1 and not pieces.w3:
        return ExtensionClass.SELF_OVERLAP
    if pieces.w1 and pieces.w3 and pieces.w_plus:
        return ExtensionClass.FLIPPED
    return ExtensionClass.ANOMALY


def _wrap(alg: QuiverAlgebra, symbols, src: DTriple, dst: DTriple, gates) -> WString:
    problem = wstring_problem(alg, symbols, gates)
    if problem:
        raise StringError(f"{alg.word_label(symbols)} {problem}")
    return WString(StringWord(tuple(symbols)), src, dst)


def _summands(alg: QuiverAlgebra, ws: WString, eclass: ExtensionClass, pieces: Pieces,
              gates) -> Tuple[WString, WString]:

    p = pieces
    if eclass is ExtensionClass.SHIFTED:
        w0 = p.w_plus
        left = _wrap(alg, p.w1 + w0 + p.w3, ws.source, ws.target, gates)
        right = _wrap(alg, p.w1 + w0 + p.w2 + w0 + p.w2 + w0 + p.w3, ws.source, ws.target, gates)
    else:
        left = _wrap(alg, inverse_symbols(p.w3) + p.w_plus + inverse_symbols(p.w2) + p.w_minus + p.w3,
                     ws.target, ws.target, gates)
        right = _wrap(alg, p.w1 + p.w_plus + p.w2 + p.w_minus + inverse_symbols(p.w1),
                      ws.source, ws.source, gates)
    return mu1(alg, left), mu2(alg, right)


def extension_report(oracle, alg: QuiverAlgebra, ws: WString,
                     triples: Optional[Sequence[DTriple]] = None) -> ExtensionReport:
    """Sort a stable basis of End(M(w)) into the four extension shapes and build each middle term."""

    triples = find_dtriples(alg.cfg) if triples is None else list(triples)
    gates = triples_by_first_edge(triples)
    tau = tau_word(alg, ws)
    basis = stable_hom_basis(oracle, ws.word, ws.word)
    report = ExtensionReport(ws, tau, len(basis))
    expected = 2 * (len(ws.word) + 1)

    for pair in basis:
        eclass = classify_pair(ws.word, pair)
        term = ExtensionTerm(pair, eclass)
        try:
            if eclass in (ExtensionClass.SHIFTED, ExtensionClass.FLIPPED):
                term.summands = _summands(alg, ws, eclass, split_pieces(ws.word, pair), gates)
            elif eclass is ExtensionClass.SELF_OVERLAP:
                check = check_overlap(alg, triples, ws.word, tau.word)
                if check.ok:
                    term.hyperstring = HyperString((ws.word, tau.word), (check.junction,))
                else:
                    term.note = f"{ws.label(alg)} does not overlap mu1 mu2 of itself: {check.reason}"
            elif eclass is ExtensionClass.IDENTITY:
                term.hyperstring = reversal_hyperstring(alg, ws)
        except BrauerWalkError as e:
            term.note = str(e)
        if term.has_middle and term.middle_dimension() != expected:
            term.note = f"middle term has dimension {term.middle_dimension()}, expected {expected}"
        report.terms.append(term)

    if report.counts()[ExtensionClass.SELF_OVERLAP.value] > 1:
        for t in report.terms:
            if t.eclass is ExtensionClass.SELF_OVERLAP:
                t.note = t.note or "more than one self-overlap"
    logging.info(f"extensions of {ws.label(alg)}: {report.counts()}")
    return report


def middle_module(alg: QuiverAlgebra, term: ExtensionTerm, prime: int) -> RepDescriptor:

    if term.hyperstring is not None:
        return hyperstring_module(alg, term.hyperstring, prime)
    module = string_module(alg, term.summands[0].word, prime)
    for s in term.summands[1:]:
        module = module.direct_sum(string_module(alg, s.word, prime))
    return module


@dataclass
class ExtensionCheck:
    pair: AdmissiblePair
    eclass: ExtensionClass
    exact: bool
    certainty: str
    local: Optional[bool] = None

    @property
    def ok(self) -> bool:
        return self.exact and self.local is not False

    def to_dict(self) -> Dict:
        result = {'pair': self.pair.to_dict(), 'class': self.eclass.value,
                  'exact': self.exact, 'certainty': self.certainty}
        if self.local is not None:
            result['local'] = self.local
        return result


def check_extensions(oracle, alg: QuiverAlgebra, report: ExtensionReport) -> List[ExtensionCheck]:
    """Check each middle term E fits 0 -> M(mu1 mu2 w) -> E -> M(w) -> 0."""

    left = string_module(alg, report.tau.word, oracle.prime)
    right = string_module(alg, report.word.word, oracle.prime)
    checks = []
    for term in report.terms:
        if not term.has_middle:
            continue
        E = middle_module(alg, term, oracle.prime)
        verdict = oracle.verify_middle_term(E, left, right)
        local = oracle.end_ring_is_local(E) if term.hyperstring is not None else None
        checks.append(ExtensionCheck(term.pair, term.eclass, verdict.isomorphic,
                                     verdict.certainty.value, local))
    return checks
