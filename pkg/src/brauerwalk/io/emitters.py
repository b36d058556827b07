# src/brauerwalk/io/emitters.py

from typing import Dict, List, Optional
import json

from ..algebra.quiver_algebra import QuiverAlgebra
from ..core.configuration import BrauerConfig, Germ
from ..walks.hyperwalk import WalkReport

TOOL_VERSION = "0.3.0"
SCHEMA_VERSION = 1


def _quote(text: str) -> str:
    return '"' + str(text).replace('\\', '\\\\').replace('"', '\\"') + '"'


def _vertex_node(v: str) -> str:
    return _quote(f"v:{v}")


def _polygon_node(x: str) -> str:
    return _quote(f"p:{x}")


def _config_lines(cfg: BrauerConfig, marks: Optional[Dict[Germ, List[int]]] = None) -> List[str]:

    marks = marks or {}
    lines = ["graph brauer {", "    node [fontname=Helvetica];"]
    for v in sorted(cfg.vertex_ids):
        m = cfg.multiplicity(v)
        text = v if m == 1 else f"{v} (m={m})"
        lines.append(f"    {_vertex_node(v)} [shape=point, xlabel={_quote(text)}];")
    for x in sorted(cfg.polygon_ids):
        ports = "|".join(f"<s{g.slot}> {cfg.kappa(g)}" for g in cfg.polygon_germs(x))
        lines.append(f"    {_polygon_node(x)} [shape=record, label={_quote('{' + x + '|{' + ports + '}}')}];")
    for g in cfg.germs():
        v = cfg.kappa(g)
        position = cfg.canonical_order(v).index(g) + 1
        attrs = [f"taillabel={_quote(position)}"]
        if g in marks:
            attrs.append(f"label={_quote(','.join(str(i) for i in marks[g]))}")
            attrs.append("color=red")
            attrs.append("penwidth=2")
        lines.append(f"    {_polygon_node(g.polygon)}:s{g.slot} -- {_vertex_node(v)} [{', '.join(attrs)}];")
    lines.append("}")
    return lines


def config_dot(cfg: BrauerConfig) -> str:
    """Vertices as points, polygons as record nodes with one port per germ slot."""
    return "\n".join(_config_lines(cfg)) + "\n"


def walk_dot(cfg: BrauerConfig, report: WalkReport) -> str:
    """The configuration with every germ of the walk labelled by the steps it occurs in."""

    marks: Dict[Germ, List[int]] = {}
    for i, step in enumerate(report.steps):
        for g in step.germs:
            marks.setdefault(g, []).append(i)
    return "\n".join(_config_lines(cfg, marks)) + "\n"


def quiver_dot(alg: QuiverAlgebra) -> str:

    lines = ["digraph quiver {", "    node [shape=circle, fontname=Helvetica];"]
    for x in sorted(alg.vertices):
        lines.append(f"    {_quote(x)};")
    for key in alg.arrows_in_order():
        a = alg.arrows[key]
        lines.append(f"    {_quote(a.source)} -> {_quote(a.target)} [label={_quote(a.label or key)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_json(kind: str, payload: Dict, input_hash: Optional[str] = None) -> str:
    """Stable JSON: sorted keys, tool and schema version, hash of the input text."""

    document = {
        'kind': kind,
        'version': TOOL_VERSION,
        'schema_version': SCHEMA_VERSION,
        'input_hash': input_hash,
        'result': payload
    }
    return json.dumps(document, indent=2, sort_keys=True, default=str) + "\n"
