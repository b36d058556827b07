# src/brauerwalk/api/platform.py

from typing import Dict, List, Optional
from enum import Enum
from datetime import datetime
import itertools
import logging
import uuid

import pandas as pd

from ..algebra.quiver_algebra import QuiverAlgebra, build_algebra
from ..algebra.representation import RepDescriptor
from ..core.configuration import BrauerConfig
from ..core.errors import BrauerWalkError, InputError
from ..core.settings import LOG_FORMAT, WalkerConfig, default_config
from ..dtriples.extensions import check_extensions, extension_report
from ..dtriples.triples import dtriple_conflicts, find_dtriples
from ..dtriples.wchi import (as_wstring, check_wchi_trace, enumerate_wchi,
                             involution_table, mu0, mu1, mu2, rank2_tubes, wchi_resolution)
from ..io.bcf import BcfDocument, load_bcf, parse_bcf
from ..io.emitters import config_dot, quiver_dot, walk_dot
from ..oracle.modules import SyzygyOracle
from ..strings.homs import hom_basis, stable_hom_dimension
from ..strings.modules import string_module
from ..strings.words import StringWord, all_strings, inverse, label, make_string, zero_string
from ..walks.hyperwalk import (classify_step, periodic_walks, quadserial_violations,
                               triserial_violations, walk)
from ..walks.resolution import (MChiDescriptor, check_trace, descriptor_from_word,
                                omega_inv, resolution)
from ..walks.tubes import classical_tube_ranks, enumerate_tubes


class PlatformState(Enum):
    EMPTY = "empty"
    LOADED = "loaded"
    BUILT = "built"
    ERROR = "error"


class BrauerWalkPlatform:

    def __init__(self, config: Optional[WalkerConfig] = None):
        self.platform_id = str(uuid.uuid4())
        self.start_time = datetime.now()
        self.state = PlatformState.EMPTY

        self.config = config or default_config()
        self._setup_logging()

        self.document: Optional[BcfDocument] = None
        self._algebra: Optional[QuiverAlgebra] = None

    def _setup_logging(self):
        logging.basicConfig(
            level=getattr(logging, self.config.log_level.upper(), logging.WARNING),
            format=LOG_FORMAT
        )
        if self.config.log_file:
            handler = logging.FileHandler(self.config.log_file)
            handler.setFormatter(logging.Formatter(LOG_FORMAT))
            logging.getLogger().addHandler(handler)

    def _failure(self, action: str, e: Exception) -> Dict:
        logging.error(f"{action} failed: {e}")
        result = {'success': False, 'reason': str(e), 'kind': type(e).__name__}
        diagnostics = getattr(e, 'diagnostics', None)
        if diagnostics:
            result['diagnostics'] = diagnostics
        line = getattr(e, 'line', None)
        if line is not None:
            result['line'] = line
        return result

    # -- loading ---------------------------------------------------------

    @property
    def cfg(self) -> BrauerConfig:
        if self.document is None:
            raise InputError("no configuration loaded")
        return self.document.config

    @property
    def input_hash(self) -> Optional[str]:
        return self.document.content_hash if self.document else None

    def algebra(self) -> QuiverAlgebra:
        if self._algebra is None:
            self._algebra = build_algebra(self.cfg, self.config.multiplicity_cap)
            self.state = PlatformState.BUILT
        return self._algebra

    def oracle(self, seed: Optional[int] = None, prime: Optional[int] = None) -> SyzygyOracle:
        settings = self.config.with_overrides(seed=seed, prime=prime)
        problems = settings.validate()
        if problems:
            raise InputError("; ".join(problems))
        return SyzygyOracle(self.algebra(), settings)

    def load(self, path: str) -> Dict:

        try:
            self.document = load_bcf(path)
            self._algebra = None
            self.state = PlatformState.LOADED
            return {'success': True, 'path': str(path), 'input_hash': self.input_hash}
        except (BrauerWalkError, OSError) as e:
            self.state = PlatformState.ERROR
            return self._failure(f"loading {path}", e)

    def load_text(self, text: str) -> Dict:

        try:
            self.document = parse_bcf(text)
            self._algebra = None
            self.state = PlatformState.LOADED
            return {'success': True, 'input_hash': self.input_hash}
        except BrauerWalkError as e:
            self.state = PlatformState.ERROR
            return self._failure("parsing configuration", e)

    # -- subcommands -----------------------------------------------------

    def validate(self) -> Dict:

        try:
            diagnostics = self.cfg.validate(self.config.multiplicity_cap)
            return {
                'success': diagnostics.is_empty,
                'diagnostics': diagnostics.to_list(),
                'reason': "" if diagnostics.is_empty else f"{len(diagnostics)} problems"
            }
        except BrauerWalkError as e:
            return self._failure("validate", e)

    def build(self) -> Dict:

        try:
            alg = self.algebra()
            return {'success': True, 'algebra': alg.summary()}
        except BrauerWalkError as e:
            return self._failure("build", e)

    def walk(self, step_ref: str) -> Dict:

        try:
            cfg = self.cfg
            self.algebra()
            refs = [r for r in step_ref.split(',') if r.strip()]
            start = classify_step(cfg, [cfg.resolve_germ_ref(r) for r in refs])
            if not start.is_step:
                raise InputError(f"{start.label(cfg)} is not a walk step: {start.reason}")
            report = walk(cfg, start, self.config.walk_step_cap)
            result = {'success': True, 'walk': report.to_dict(cfg)}
            problems = quadserial_violations(cfg, report) + triserial_violations(cfg, report)
            if problems:
                result['structure_warnings'] = problems
            return result
        except BrauerWalkError as e:
            return self._failure(f"walk from {step_ref}", e)

    def tubes(self, include_wchi: bool = False) -> Dict:

        try:
            alg = self.algebra()
            tubes = enumerate_tubes(alg)
            result = {
                'success': True,
                'tubes': [t.to_dict(alg) for t in tubes],
                'ranks': [t.rank for t in tubes]
            }
            if include_wchi:
                extra = rank2_tubes(alg, max_len=self.config.max_len)
                result['wchi_tubes'] = [t.to_dict(alg) for t in extra]
            return result
        except BrauerWalkError as e:
            return self._failure("tubes", e)

    def wchi(self, max_len: Optional[int] = None) -> Dict:

        try:
            alg = self.algebra()
            limit = max_len or self.config.max_len
            triples = find_dtriples(alg.cfg)
            words = enumerate_wchi(alg, limit, triples)
            return {
                'success': True,
                'max_len': limit,
                'dtriples': [d.to_dict() for d in triples],
                'words': [w.to_dict(alg) for w in words],
                'involutions': involution_table(alg, words),
                'tubes': [t.to_dict(alg) for t in rank2_tubes(alg, words)]
            }
        except BrauerWalkError as e:
            return self._failure("wchi", e)

    def parse_module(self, module_ref: str):
        """S(x), a braced walk step {g, h}, or a word of germ references with ^-1 for inverses."""

        alg = self.algebra()
        text = module_ref.strip()
        if text.startswith('S(') and text.endswith(')'):
            return descriptor_from_word(alg, zero_string(alg, text[2:-1]))
        if text.startswith('{') and text.endswith('}'):
            refs = [r for r in text[1:-1].split(',') if r.strip()]
            step = classify_step(alg.cfg, [alg.cfg.resolve_germ_ref(r) for r in refs])
            if not step.is_step:
                raise InputError(f"{step.label(alg.cfg)} is not a walk step: {step.reason}")
            return omega_inv(alg, step)
        symbols = alg.parse_word(text)
        if find_dtriples(alg.cfg):
            try:
                return as_wstring(alg, symbols)
            except BrauerWalkError:
                pass
        return descriptor_from_word(alg, make_string(alg, symbols))

    def resolve(self, module_ref: str, steps: int = 8) -> Dict:

        try:
            alg = self.algebra()
            module = self.parse_module(module_ref)
            if isinstance(module, MChiDescriptor):
                trace = resolution(alg, module, steps, self.config.walk_step_cap)
            else:
                trace = wchi_resolution(alg, module)
            return {'success': True, 'resolution': trace.to_dict(alg)}
        except BrauerWalkError as e:
            return self._failure(f"resolve {module_ref}", e)

    def ext(self, word_ref: str, seed: Optional[int] = None, prime: Optional[int] = None) -> Dict:

        try:
            alg = self.algebra()
            ws = as_wstring(alg, alg.parse_word(word_ref))
            oracle = self.oracle(seed, prime)
            report = extension_report(oracle, alg, ws)
            checks = check_extensions(oracle, alg, report)
            return {
                'success': not report.anomalies and all(c.ok for c in checks),
                'extensions': report.to_dict(alg),
                'checks': [c.to_dict() for c in checks],
                'reason': "; ".join(t.note for t in report.anomalies if t.note)
            }
        except BrauerWalkError as e:
            return self._failure(f"ext {word_ref}", e)

    def render(self, kind: str = "config", step_ref: Optional[str] = None) -> Dict:

        try:
            if kind == "config":
                return {'success': True, 'dot': config_dot(self.cfg)}
            if kind == "quiver":
                return {'success': True, 'dot': quiver_dot(self.algebra())}
            if kind == "walk":
                if not step_ref:
                    raise InputError("walk rendering needs a starting step")
                cfg = self.cfg
                start = classify_step(cfg, [cfg.resolve_germ_ref(r) for r in step_ref.split(',') if r.strip()])
                if not start.is_step:
                    raise InputError(f"{start.label(cfg)} is not a walk step: {start.reason}")
                return {'success': True, 'dot': walk_dot(cfg, walk(cfg, start, self.config.walk_step_cap))}
            raise InputError(f"unknown rendering {kind!r}")
        except BrauerWalkError as e:
            return self._failure(f"render {kind}", e)

    # -- oracle suite ----------------------------------------------------

    @staticmethod
    def _module(alg: QuiverAlgebra, oracle: SyzygyOracle, modules: Dict, w: StringWord) -> RepDescriptor:
        if w not in modules:
            modules[w] = string_module(alg, w, oracle.prime)
        return modules[w]

    def _inverse_row(self, alg: QuiverAlgebra, oracle: SyzygyOracle, modules: Dict, w: StringWord) -> Dict:
        verdict = oracle.compare(self._module(alg, oracle, modules, w),
                                 self._module(alg, oracle, modules, inverse(w)))
        return {'check': 'inverse-isomorphism', 'subject': label(alg, w),
                'verdict': verdict.isomorphic, 'certainty': verdict.certainty.value}

    def _hom_count_row(self, alg: QuiverAlgebra, oracle: SyzygyOracle, modules: Dict,
                       w: StringWord, w2: StringWord) -> Dict:
        predicted = len(hom_basis(alg, w, w2))
        actual = oracle.hom_dimension(self._module(alg, oracle, modules, w),
                                      self._module(alg, oracle, modules, w2))
        return {'check': 'hom-count', 'subject': f"{label(alg, w)} -> {label(alg, w2)}",
                'verdict': predicted == actual, 'certainty': 'exact'}

    def verification_table(self, seed: Optional[int] = None, prime: Optional[int] = None,
                           max_len: Optional[int] = None, string_len: int = 2) -> pd.DataFrame:
        """One row per oracle check on the loaded configuration."""

        alg = self.algebra()
        oracle = self.oracle(seed, prime)
        rows: List[Dict] = []
        modules: Dict[StringWord, RepDescriptor] = {}

        if not alg.exceptional:
            for report in periodic_walks(alg.cfg):
                start = omega_inv(alg, report.start)
                trace = resolution(alg, start, 2 * report.period + 1, self.config.walk_step_cap)
                for check in check_trace(oracle, alg, trace):
                    rows.append({'check': 'hyperwalk-syzygy',
                                 'subject': f"{start.label(alg)}[{check.index}]",
                                 'verdict': check.ok, 'certainty': check.certainty})

        if alg.cfg.is_brauer_graph() and not alg.exceptional and alg.cfg.is_connected():
            classical = classical_tube_ranks(alg.cfg)
            hyper = sorted(t.rank for t in enumerate_tubes(alg))
            rows.append({'check': 'classical-ranks', 'subject': str(classical),
                         'verdict': classical == hyper, 'certainty': 'exact'})

        if not alg.exceptional:
            strings = all_strings(alg, string_len)
            for w in strings:
                rows.append(self._inverse_row(alg, oracle, modules, w))
            for w, w2 in itertools.product(strings, repeat=2):
                rows.append(self._hom_count_row(alg, oracle, modules, w, w2))

        triples = find_dtriples(alg.cfg)
        conflicts = dtriple_conflicts(triples)
        if conflicts:
            logging.warning(f"skipping W-string checks: {'; '.join(conflicts)}")
            triples = []
        words = enumerate_wchi(alg, max_len or self.config.max_len, triples) if triples else []
        for ws in words:
            name = ws.label(alg)
            laws = (mu0(alg, mu0(alg, ws)).word == ws.word and
                    mu1(alg, mu1(alg, ws)).word == ws.word and
                    mu2(alg, mu2(alg, ws)).word == ws.word and
                    mu1(alg, mu2(alg, ws)).word == mu2(alg, mu1(alg, ws)).word and
                    mu0(alg, mu1(alg, ws)).word == mu1(alg, mu0(alg, ws)).word and
                    mu0(alg, mu2(alg, ws)).word == mu2(alg, mu0(alg, ws)).word)
            rows.append({'check': 'involution-laws', 'subject': name, 'verdict': laws, 'certainty': 'exact'})
            rows.append(self._inverse_row(alg, oracle, modules, ws.word))
            for check in check_wchi_trace(oracle, alg, wchi_resolution(alg, ws, triples)):
                rows.append({'check': 'wchi-syzygy', 'subject': f"{name}[{check.index}]",
                             'verdict': check.ok, 'certainty': check.certainty})
            report = extension_report(oracle, alg, ws, triples)
            for w, w2 in ((ws.word, ws.word), (ws.word, report.tau.word), (report.tau.word, ws.word)):
                rows.append(self._hom_count_row(alg, oracle, modules, w, w2))
            counts = report.counts()
            rows.append({'check': 'extension-count', 'subject': name,
                         'verdict': not report.anomalies and counts['A4'] == 1 and counts['A3'] <= 1,
                         'certainty': 'exact'})
            classified = sum(counts[c] for c in ('A1', 'A2', 'A3', 'A4'))
            rows.append({'check': 'stable-end-dimension', 'subject': name,
                         'verdict': classified == stable_hom_dimension(oracle, ws.word, ws.word),
                         'certainty': 'exact'})
            for check in check_extensions(oracle, alg, report):
                rows.append({'check': f"extension-{check.eclass.value}", 'subject': name,
                             'verdict': check.ok, 'certainty': check.certainty})

        return pd.DataFrame(rows, columns=['check', 'subject', 'verdict', 'certainty'])

    def verify(self, seed: Optional[int] = None, prime: Optional[int] = None,
               max_len: Optional[int] = None, string_len: int = 2) -> Dict:

        try:
            table = self.verification_table(seed, prime, max_len, string_len)
            table['verdict'] = table['verdict'].astype(bool)
            failed = table[~table['verdict']]
            summary = {}
            if len(table):
                grouped = table.groupby('check')['verdict'].agg(['count', 'sum'])
                summary = {check: {'count': int(row['count']), 'passed': int(row['sum'])}
                           for check, row in grouped.iterrows()}
            failures = [{'check': r.check, 'subject': r.subject, 'verdict': bool(r.verdict),
                         'certainty': r.certainty} for r in failed.itertuples(index=False)]
            return {
                'success': len(failed) == 0,
                'seed': self.config.seed if seed is None else seed,
                'prime': self.config.prime if prime is None else prime,
                'summary': summary,
                'failures': failures,
                'table': table,
                'reason': "" if len(failed) == 0 else f"{len(failed)} checks failed"
            }
        except BrauerWalkError as e:
            return self._failure("verify", e)
