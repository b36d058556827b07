# src/brauerwalk/walks/hyperwalk.py

from typing import Dict, Iterable, List, Optional, Tuple
from enum import Enum
from dataclasses import dataclass, field
import itertools
import logging

from ..core.configuration import BrauerConfig, Germ
from ..core.errors import InputError, TheoryViolation


class StepKind(Enum):
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"
    EMPTY = "empty"


class WalkStatus(Enum):
    PERIODIC = "periodic"
    TERMINATING = "terminating"


@dataclass(frozen=True, order=True)
class WalkStep:
    germs: Tuple[Germ, ...]
    kind: StepKind = field(default=StepKind.EMPTY, compare=False)
    reason: str = field(default="", compare=False)

    @property
    def is_step(self) -> bool:
        return self.kind is not StepKind.EMPTY

    @property
    def polygon(self) -> Optional[str]:
        """Polygon containing a G1/G2 step."""
        if self.kind in (StepKind.G1, StepKind.G2):
            return self.germs[0].polygon
        return None

    def refs(self, cfg: BrauerConfig) -> List[str]:
        return [cfg.germ_ref(g) for g in self.germs]

    def label(self, cfg: BrauerConfig) -> str:
        return "{" + ", ".join(self.refs(cfg)) + "}"

    def to_dict(self, cfg: BrauerConfig) -> Dict:
        result = {'germs': self.refs(cfg), 'kind': self.kind.value}
        if self.reason:
            result['reason'] = self.reason
        return result


@dataclass
class WalkReport:
    start: WalkStep
    steps: List[WalkStep]
    status: WalkStatus
    period: Optional[int] = None
    rejected: Tuple[Germ, ...] = ()
    stop_reason: str = ""

    @property
    def is_periodic(self) -> bool:
        return self.status is WalkStatus.PERIODIC

    def step_at(self, i: int) -> Optional[WalkStep]:
        """X_i of the infinite walk; None past termination."""
        if self.is_periodic:
            return self.steps[i % self.period]
        return self.steps[i] if i < len(self.steps) else None

    def to_dict(self, cfg: BrauerConfig) -> Dict:
        result = {
            'start': self.start.refs(cfg),
            'status': self.status.value,
            'steps': [s.to_dict(cfg) for s in self.steps]
        }
        if self.is_periodic:
            result['period'] = self.period
        else:
            result['rejected'] = [cfg.germ_ref(g) for g in self.rejected]
            result['stop_reason'] = self.stop_reason
        return result


def _germ_set(cfg: BrauerConfig, germs: Iterable[Germ]) -> Tuple[Germ, ...]:
    germs = tuple(sorted(set(germs)))
    for g in germs:
        if not cfg.has_germ(g):
            raise InputError(f"unknown germ {g}")
    return germs


def _pair_reason(cfg: BrauerConfig, pair: Tuple[Germ, ...]) -> Optional[str]:
    """None when the pair is a G2 step, otherwise why it is not."""

    g, h = pair
    if g.polygon != h.polygon:
        return f"{cfg.germ_ref(g)} and {cfg.germ_ref(h)} lie in different polygons"
    if cfg.polygon_size(g.polygon) < 3:
        return f"pair is not a proper subset of {g.polygon}"
    for germ in pair:
        vertex = cfg.kappa(germ)
        if cfg.multiplicity(vertex) != 1:
            return f"multiplicity of {vertex} is {cfg.multiplicity(vertex)}"
        if cfg.valency(vertex) != 2:
            return f"valency of {vertex} is {cfg.valency(vertex)}"
        successor = cfg.sigma(germ).polygon
        if not cfg.is_truncated_edge(successor):
            return f"sigma-successor {successor} of {cfg.germ_ref(germ)} is not a truncated edge"
    return None


def classify_step(cfg: BrauerConfig, germs: Iterable[Germ]) -> WalkStep:

    germs = _germ_set(cfg, germs)
    if not germs:
        return WalkStep(germs, StepKind.EMPTY, "empty set")
    if len(germs) >= len(cfg.germs()):
        return WalkStep(germs, StepKind.EMPTY, "not a proper subset of the germs")
    if len(germs) == 1:
        return WalkStep(germs, StepKind.G1)
    if len(germs) > 2:
        return WalkStep(germs, StepKind.EMPTY, f"{len(germs)} germs")

    reason = _pair_reason(cfg, germs)
    if reason is None:
        return WalkStep(germs, StepKind.G2)
    image = tuple(sorted(cfg.sigma(g) for g in germs))
    if len(set(image)) == 2 and _pair_reason(cfg, image) is None:
        return WalkStep(germs, StepKind.G3)
    return WalkStep(germs, StepKind.EMPTY, reason)


def step_of(cfg: BrauerConfig, germs: Iterable[Germ]) -> WalkStep:
    """classify_step that insists on a step."""
    step = classify_step(cfg, germs)
    if not step.is_step:
        raise InputError(f"{step.label(cfg)} is not a walk step: {step.reason}")
    return step


def all_steps(cfg: BrauerConfig) -> List[WalkStep]:

    steps = [WalkStep((g,), StepKind.G1) for g in cfg.germs()]
    for x in cfg.polygon_ids:
        if cfg.polygon_size(x) < 3:
            continue
        for pair in itertools.combinations(cfg.polygon_germs(x), 2):
            if _pair_reason(cfg, pair) is None:
                steps.append(WalkStep(pair, StepKind.G2))
                back = tuple(sorted(cfg.sigma_inv(g) for g in pair))
                steps.append(WalkStep(back, StepKind.G3))
    return sorted(steps)


def next_set(cfg: BrauerConfig, step: WalkStep) -> Tuple[Germ, ...]:

    if step.kind is StepKind.G3:
        return tuple(sorted(cfg.sigma(g) for g in step.germs))
    if step.kind in (StepKind.G1, StepKind.G2):
        rest = [g for g in cfg.polygon_germs(step.polygon) if g not in step.germs]
        return tuple(sorted(cfg.sigma(g) for g in rest))
    return ()


def walk(cfg: BrauerConfig, start: WalkStep, step_cap: Optional[int] = None) -> WalkReport:

    if not start.is_step:
        raise InputError(f"walks start at a step, got {start.label(cfg)}")
    cap = step_cap or len(all_steps(cfg)) + 1

    steps = [start]
    seen = {start.germs}
    while True:
        current = steps[-1]
        Y = next_set(cfg, current)
        following = classify_step(cfg, Y) if Y else WalkStep(Y, StepKind.EMPTY, "empty set")
        if not following.is_step:
            if current.kind is StepKind.G3:
                raise TheoryViolation(f"walk stopped after the G3 step {current.label(cfg)}")
            logging.debug(f"walk from {start.label(cfg)} terminates after {len(steps)} steps")
            return WalkReport(start, steps, WalkStatus.TERMINATING, None, Y, following.reason)
        if following.germs == start.germs:
            logging.debug(f"walk from {start.label(cfg)} is periodic with period {len(steps)}")
            return WalkReport(start, steps, WalkStatus.PERIODIC, len(steps))
        if following.germs in seen:
            raise TheoryViolation(f"walk from {start.label(cfg)} cycles through {following.label(cfg)} "
                                  f"without returning to its start")
        if len(steps) >= cap:
            raise TheoryViolation(f"walk from {start.label(cfg)} exceeded {cap} steps")
        seen.add(following.germs)
        steps.append(following)


def periodic_walks(cfg: BrauerConfig) -> List[WalkReport]:
    """One report per periodic walk, started at its smallest step."""

    reports = []
    covered = set()
    for step in all_steps(cfg):
        if step.germs in covered:
            continue
        report = walk(cfg, step)
        if report.is_periodic:
            covered.update(s.germs for s in report.steps)
            reports.append(report)
    return reports


# -- structural checks on non-terminating walks --------------------------

def _leaf_edge(cfg: BrauerConfig, germ: Germ) -> Optional[str]:
    """Truncated edge met by sigma at a multiplicity 1, valency 2 vertex."""

    vertex = cfg.kappa(germ)
    if cfg.multiplicity(vertex) != 1 or cfg.valency(vertex) != 2:
        return None
    edge = cfg.sigma(germ).polygon
    if edge == germ.polygon or not cfg.is_truncated_edge(edge):
        return None
    return edge


def quadserial_violations(cfg: BrauerConfig, report: WalkReport) -> List[str]:

    if not report.is_periodic:
        return []
    problems = []
    big = sorted({g.polygon for s in report.steps for g in s.germs if cfg.polygon_size(g.polygon) > 4})
    for x in big:
        problems.append(f"non-terminating walk touches the {cfg.polygon_size(x)}-gon {x}")

    quads = sorted({g.polygon for s in report.steps for g in s.germs if cfg.polygon_size(g.polygon) == 4})
    for x in quads:
        germs = cfg.polygon_germs(x)
        edges = [_leaf_edge(cfg, g) for g in germs]
        if cfg.is_self_folded(x) or None in edges or len(set(edges)) != 4:
            problems.append(f"4-gon {x} is not surrounded by four truncated edges")
        elif len(cfg.polygon_ids) != 5 or any(cfg.multiplicity(v) != 1 for v in cfg.vertex_ids):
            problems.append(f"configuration around 4-gon {x} has extra polygons or multiplicities")
        if report.period != 4:
            problems.append(f"walk through 4-gon {x} has period {report.period}, expected 4")
        for i, step in enumerate(report.steps):
            if step.polygon == x and step.kind is not StepKind.G2:
                problems.append(f"step {i} in 4-gon {x} is {step.kind.value}, expected G2")
    return problems


def triserial_violations(cfg: BrauerConfig, report: WalkReport) -> List[str]:

    if not report.is_periodic:
        return []
    problems = []
    n = report.period
    for i, step in enumerate(report.steps):
        if step.kind not in (StepKind.G1, StepKind.G2) or cfg.polygon_size(step.polygon) != 3:
            continue
        x = step.polygon
        if cfg.is_self_folded(x):
            problems.append(f"3-gon {x} at step {i} is self-folded")
            continue
        outside = [g for g in cfg.polygon_germs(x) if g not in step.germs]

        if step.kind is StepKind.G1:
            if any(_leaf_edge(cfg, g) is None for g in outside):
                problems.append(f"3-gon {x} at step {i} lacks two truncated edges")
                continue
            expected = [
                tuple(sorted(cfg.sigma(g) for g in outside)),
                tuple(sorted(outside)),
                (cfg.sigma(step.germs[0]),),
            ]
        else:
            if any(_leaf_edge(cfg, g) is None for g in step.germs):
                problems.append(f"3-gon {x} at step {i} lacks two truncated edges")
                continue
            expected = [(cfg.sigma(outside[0]),)]

        for offset, germs in enumerate(expected, start=1):
            actual = report.steps[(i + offset) % n].germs
            if actual != germs:
                problems.append(f"step {i + offset} after 3-gon {x} is "
                                f"{[str(g) for g in actual]}, expected {[str(g) for g in germs]}")
                break
    return problems
