# src/brauerwalk/dtriples/wchi.py

from typing import Dict, List, Optional, Sequence, Tuple
from enum import Enum
from dataclasses import dataclass, field
import logging

from .triples import DTriple, find_dtriples, triples_by_first_edge
from ..algebra.quiver import ArrowSymbol, direction_runs
from ..algebra.quiver_algebra import QuiverAlgebra
from ..core.errors import StringError, TheoryViolation
from ..strings.modules import string_module
from ..strings.words import (StringWord, canonical, inverse, inverse_symbols, label,
                             top_vertices, vertices_along)
from ..walks.tubes import TubeReport, TubeSource


@dataclass(frozen=True, order=True)
class WString:
    """A string running from the truncated edge y1 of one D-triple to y1 of another."""

    word: StringWord
    source: DTriple
    target: DTriple

    @property
    def alpha(self) -> ArrowSymbol:
        return self.word.first

    @property
    def gamma(self) -> ArrowSymbol:
        return self.word.last

    @property
    def inner(self) -> Tuple[ArrowSymbol, ...]:
        return self.word.symbols[1:-1]

    def reversed(self) -> 'WString':
        return WString(inverse(self.word), self.target, self.source)

    def label(self, alg: QuiverAlgebra) -> str:
        return label(alg, self.word)

    def to_dict(self, alg: QuiverAlgebra) -> Dict:
        return {
            'word': self.label(alg),
            'length': len(self.word),
            'source': self.source.name,
            'target': self.target.name,
            'composition': vertices_along(alg, self.word)
        }


def canonical_wstring(ws: WString) -> WString:
    back = ws.reversed()
    return ws if ws.word <= back.word else back


def gate_symbols(alg: QuiverAlgebra, vertex: str) -> List[ArrowSymbol]:
    """Letters that can start a string at the given vertex."""
    return sorted([alg.direct(a) for a in alg.arrows_out(vertex)] +
                  [alg.inverse(a) for a in alg.arrows_in(vertex)])


def end_symbols(alg: QuiverAlgebra, vertex: str) -> List[ArrowSymbol]:
    """Letters that can end a string at the given vertex."""
    return sorted([alg.direct(a) for a in alg.arrows_in(vertex)] +
                  [alg.inverse(a) for a in alg.arrows_out(vertex)])


def _turn_ok(alg: QuiverAlgebra, before: ArrowSymbol, after: ArrowSymbol) -> bool:
    if before.inverse == after.inverse:
        return True
    return alg.cfg.polygon_size(alg.t(before)) == 2


def wstring_problem(alg: QuiverAlgebra, symbols: Sequence[ArrowSymbol],
                    gates: Dict[str, DTriple]) -> Optional[str]:

    if len(symbols) < 3:
        return "needs at least three letters"
    if not alg.string_avoids_relations(symbols):
        return "is not a string"
    if alg.s(symbols[0]) not in gates:
        return f"starts at {alg.s(symbols[0])}, not at the first edge of a D-triple"
    if alg.t(symbols[-1]) not in gates:
        return f"ends at {alg.t(symbols[-1])}, not at the first edge of a D-triple"
    inner = symbols[1:-1]
    for before, after in zip(inner, inner[1:]):
        if not _turn_ok(alg, before, after):
            return f"changes direction at the {alg.cfg.polygon_size(alg.t(before))}-gon {alg.t(before)}"
    return None


def as_wstring(alg: QuiverAlgebra, symbols: Sequence[ArrowSymbol],
               triples: Optional[List[DTriple]] = None) -> WString:

    gates = triples_by_first_edge(find_dtriples(alg.cfg) if triples is None else triples)
    problem = wstring_problem(alg, symbols, gates)
    if problem:
        raise StringError(f"{alg.word_label(symbols)} {problem}")
    return WString(StringWord(tuple(symbols)), gates[alg.s(symbols[0])], gates[alg.t(symbols[-1])])


def is_wstring(alg: QuiverAlgebra, symbols: Sequence[ArrowSymbol],
               triples: Optional[List[DTriple]] = None) -> bool:
    gates = triples_by_first_edge(find_dtriples(alg.cfg) if triples is None else triples)
    return wstring_problem(alg, symbols, gates) is None


def _extend(alg: QuiverAlgebra, gates: Dict[str, DTriple], d: DTriple, prefix: List[ArrowSymbol],
            max_len: int, found: Dict[StringWord, WString]):

    end = alg.t(prefix[-1])
    if end in gates:
        if len(prefix) >= 3:
            ws = canonical_wstring(WString(StringWord(tuple(prefix)), d, gates[end]))
            found.setdefault(ws.word, ws)
        return
    if len(prefix) >= max_len:
        return
    for sym in gate_symbols(alg, end):
        candidate = prefix + [sym]
        if not alg.string_avoids_relations(candidate):
            continue
        if len(candidate) >= 4 and not _turn_ok(alg, candidate[-3], candidate[-2]):
            continue
        _extend(alg, gates, d, candidate, max_len, found)


def enumerate_wchi(alg: QuiverAlgebra, max_len: int = 24,
                   triples: Optional[List[DTriple]] = None) -> List[WString]:
    """All W-strings up to max_len letters, one per inverse pair."""

    triples = find_dtriples(alg.cfg) if triples is None else triples
    gates = triples_by_first_edge(triples)
    found: Dict[StringWord, WString] = {}
    for y1 in sorted(gates):
        for first in gate_symbols(alg, y1):
            _extend(alg, gates, gates[y1], [first], max_len, found)
    words = [found[k] for k in sorted(found)]
    logging.info(f"found {len(words)} W-strings up to length {max_len} over {len(triples)} D-triples")
    return words


# -- involutions -----------------------------------------------------------

def _other(symbols: List[ArrowSymbol], sym: ArrowSymbol, where: str) -> ArrowSymbol:
    rest = [s for s in symbols if s != sym]
    if len(rest) != 1:
        raise TheoryViolation(f"{where} does not have exactly two letters")
    return rest[0]


def _complement_run(alg: QuiverAlgebra, is_direct_run: bool, run: List[ArrowSymbol]) -> List[ArrowSymbol]:

    arrows = [sym.arrow for sym in run]
    k = len(arrows)
    if is_direct_run:
        rest = alg.cycle_power(alg.cycle_successor(arrows[-1]), alg.full_length(arrows[-1]) - k)
        return list(inverse_symbols([alg.direct(a) for a in rest]))
    rest = alg.walk_back(arrows[-1], alg.full_length(arrows[-1]) - k)
    return [alg.direct(a) for a in rest]


def mu0(alg: QuiverAlgebra, ws: WString, triples: Optional[List[DTriple]] = None) -> WString:
    """Swap the end gates and complement every maximal run of the middle to its full cycle."""

    middle = []
    for is_direct_run, run in direction_runs(ws.inner):
        middle.extend(_complement_run(alg, is_direct_run, run))
    alpha = _other(gate_symbols(alg, ws.source.y1), ws.alpha, f"gate {ws.source.y1}")
    gamma = _other(end_symbols(alg, ws.target.y1), ws.gamma, f"gate {ws.target.y1}")
    symbols = [alpha] + middle + [gamma]
    try:
        result = as_wstring(alg, symbols, triples)
    except StringError as e:
        raise TheoryViolation(f"mu0 of {ws.label(alg)} is not a W-string: {e}")
    return WString(result.word, ws.source, ws.target)


def _unique(candidates: List[ArrowSymbol], what: str) -> ArrowSymbol:
    if len(candidates) != 1:
        raise TheoryViolation(f"{what} has {len(candidates)} admissible letters")
    return candidates[0]


def mu1(alg: QuiverAlgebra, ws: WString) -> WString:
    """Move the start of the word to the other truncated edge of its D-triple."""

    rest = ws.word.symbols[1:]
    candidates = [sym for sym in gate_symbols(alg, ws.source.y2)
                  if alg.string_avoids_relations((sym,) + rest)]
    alpha = _unique(candidates, f"mu1 of {ws.label(alg)}")
    return WString(StringWord((alpha,) + rest), ws.source.swapped(), ws.target)


def mu2(alg: QuiverAlgebra, ws: WString) -> WString:
    """Move the end of the word to the other truncated edge of its D-triple."""

    rest = ws.word.symbols[:-1]
    candidates = [sym for sym in end_symbols(alg, ws.target.y2)
                  if alg.string_avoids_relations(rest + (sym,))]
    gamma = _unique(candidates, f"mu2 of {ws.label(alg)}")
    return WString(StringWord(rest + (gamma,)), ws.source, ws.target.swapped())


def tau_word(alg: QuiverAlgebra, ws: WString) -> WString:
    return mu1(alg, mu2(alg, ws))


# -- syzygies ----------------------------------------------------------------

class WchiCase(Enum):
    DIRECT_DIRECT = "direct-direct"
    INVERSE_INVERSE = "inverse-inverse"
    INVERSE_DIRECT = "inverse-direct"
    DIRECT_INVERSE = "direct-inverse"


def wchi_case(ws: WString) -> WchiCase:
    if ws.alpha.is_direct:
        return WchiCase.DIRECT_DIRECT if ws.gamma.is_direct else WchiCase.DIRECT_INVERSE
    return WchiCase.INVERSE_DIRECT if ws.gamma.is_direct else WchiCase.INVERSE_INVERSE


@dataclass
class WchiTerm:
    index: int
    word: WString
    projectives: Tuple[str, ...]


@dataclass
class WchiTrace:
    start: WString
    case: WchiCase
    terms: List[WchiTerm] = field(default_factory=list)

    def projective_sequence(self) -> List[Tuple[str, ...]]:
        return [t.projectives for t in self.terms]

    def to_dict(self, alg: QuiverAlgebra) -> Dict:
        return {
            'word': self.start.to_dict(alg),
            'case': self.case.value,
            'period': len(self.terms),
            'terms': [
                {
                    'index': t.index,
                    'projective': [f"P({x})" for x in t.projectives],
                    'syzygy': t.word.to_dict(alg)
                }
                for t in self.terms
            ]
        }


def syzygy_words(alg: QuiverAlgebra, ws: WString,
                 triples: Optional[List[DTriple]] = None) -> List[WString]:
    """Omega^0 .. Omega^3 of M(w); Omega^4 returns to w."""

    def m0(v):
        return mu0(alg, v, triples)

    case = wchi_case(ws)
    tau = tau_word(alg, ws)
    if case is WchiCase.DIRECT_DIRECT:
        return [ws, m0(mu2(alg, ws)), tau, m0(mu1(alg, ws))]
    if case is WchiCase.INVERSE_INVERSE:
        return [ws, m0(mu1(alg, ws)), tau, m0(mu2(alg, ws))]
    if case is WchiCase.INVERSE_DIRECT:
        return [ws, m0(tau), tau, m0(ws)]
    return [ws, m0(ws), tau, m0(tau)]


def wchi_resolution(alg: QuiverAlgebra, ws: WString,
                    triples: Optional[List[DTriple]] = None) -> WchiTrace:

    trace = WchiTrace(ws, wchi_case(ws))
    for i, w in enumerate(syzygy_words(alg, ws, triples)):
        trace.terms.append(WchiTerm(i, w, tuple(top_vertices(alg, w.word))))
    return trace


@dataclass
class WchiCheck:
    index: int
    cover_matches: bool
    isomorphic: bool
    certainty: str

    @property
    def ok(self) -> bool:
        return self.cover_matches and self.isomorphic


def check_wchi_trace(oracle, alg: QuiverAlgebra, trace: WchiTrace) -> List[WchiCheck]:
    """Recompute the four syzygy steps, including the return to the start."""

    checks = []
    words = [t.word for t in trace.terms] + [trace.start]
    for term, following in zip(trace.terms, words[1:]):
        M = string_module(alg, term.word.word, oracle.prime)
        cover = oracle.projective_cover(M)
        kernel, _ = oracle.kernel(cover.projective, cover.cover, f"Omega({M.name})")
        verdict = oracle.compare(kernel, string_module(alg, following.word, oracle.prime))
        checks.append(WchiCheck(term.index, tuple(sorted(cover.summands)) == term.projectives,
                                verdict.isomorphic, verdict.certainty.value))
    return checks


# -- tubes of rank two ---------------------------------------------------------

def rank2_tubes(alg: QuiverAlgebra, words: Optional[List[WString]] = None,
                max_len: int = 24) -> List[TubeReport]:
    """Each class {w, mu1 mu2 w} (up to inversion) is the mouth of a rank 2 tube."""

    words = enumerate_wchi(alg, max_len) if words is None else words
    tubes = {}
    for ws in words:
        partner = tau_word(alg, ws)
        if canonical(partner.word) == canonical(ws.word):
            raise TheoryViolation(f"mu1 mu2 fixes {ws.label(alg)}")
        key = tuple(sorted((canonical(ws.word), canonical(partner.word))))
        tubes.setdefault(key, TubeReport(TubeSource.WCHI, 2, (ws.word, partner.word)))
    return [tubes[k] for k in sorted(tubes)]


def involution_table(alg: QuiverAlgebra, words: List[WString]) -> List[Dict]:
    """Images of each W-string under the three involutions."""

    table = []
    for ws in words:
        table.append({
            'word': ws.label(alg),
            'mu0': canonical_wstring(mu0(alg, ws)).label(alg),
            'mu1': canonical_wstring(mu1(alg, ws)).label(alg),
            'mu2': canonical_wstring(mu2(alg, ws)).label(alg)
        })
    return table
