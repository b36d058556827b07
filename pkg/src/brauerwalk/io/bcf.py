# src/brauerwalk/io/bcf.py

from typing import Dict, List, Optional, Tuple
from dataclasses import dataclass, field
from pathlib import Path
import hashlib
import logging
import re

from ..core.configuration import BrauerConfig, Germ
from ..core.errors import BcfParseError

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_'\-]*$")


@dataclass
class BcfDocument:
    config: BrauerConfig
    vertex_lines: Dict[str, int] = field(default_factory=dict)
    polygon_lines: Dict[str, int] = field(default_factory=dict)
    order_lines: Dict[str, int] = field(default_factory=dict)
    text: str = ""

    @property
    def content_hash(self) -> str:
        return hashlib.sha256(self.text.encode('utf-8')).hexdigest()

    def line_of(self, ident: str) -> Optional[int]:
        for table in (self.order_lines, self.polygon_lines, self.vertex_lines):
            if ident in table:
                return table[ident]
        return None


def _ident(token: str, what: str, line: int) -> str:
    if not _IDENT.match(token):
        raise BcfParseError(f"invalid {what} id {token!r}", line)
    return token


def _split_colon(body: str, keyword: str, line: int) -> Tuple[str, List[str]]:
    if ':' not in body:
        raise BcfParseError(f"expected '{keyword} <id> : ...'", line)
    head, tail = body.split(':', 1)
    head = head.strip()
    if not head or len(head.split()) != 1:
        raise BcfParseError(f"expected a single id before ':' in {keyword} line", line)
    return head, tail.split()


def parse_bcf(text: str) -> BcfDocument:
    """Parse the line-oriented configuration format; errors carry line numbers."""

    vertices: Dict[str, int] = {}
    polygons: Dict[str, List[str]] = {}
    raw_orders: Dict[str, List[Tuple[str, int]]] = {}
    doc_lines = {'vertex': {}, 'polygon': {}, 'order': {}}

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        keyword, _, body = line.partition(' ')
        body = body.strip()

        if keyword == 'vertex':
            tokens = body.split()
            if not tokens or len(tokens) > 2:
                raise BcfParseError("expected 'vertex <id> [mult=<n>]'", number)
            vid = _ident(tokens[0], 'vertex', number)
            if vid in vertices:
                raise BcfParseError(f"vertex {vid} declared twice", number, doc_lines['vertex'][vid])
            mult = 1
            if len(tokens) == 2:
                match = re.fullmatch(r"mult=(\d+)", tokens[1])
                if not match:
                    raise BcfParseError(f"malformed multiplicity {tokens[1]!r}", number)
                mult = int(match.group(1))
            vertices[vid] = mult
            doc_lines['vertex'][vid] = number

        elif keyword == 'polygon':
            pid, members = _split_colon(body, 'polygon', number)
            _ident(pid, 'polygon', number)
            if pid in polygons:
                raise BcfParseError(f"polygon {pid} declared twice", number, doc_lines['polygon'][pid])
            if len(members) < 2:
                raise BcfParseError(f"polygon {pid} needs at least two germs", number)
            for v in members:
                if v not in vertices:
                    raise BcfParseError(f"polygon {pid} uses undeclared vertex {v}", number)
            polygons[pid] = members
            doc_lines['polygon'][pid] = number

        elif keyword == 'order':
            vid, entries = _split_colon(body, 'order', number)
            if vid not in vertices:
                raise BcfParseError(f"order given for undeclared vertex {vid}", number)
            if vid in raw_orders:
                raise BcfParseError(f"vertex {vid} has two order lines", number, doc_lines['order'][vid])
            refs = []
            for entry in entries:
                pid, _, occ = entry.partition('.')
                if not occ:
                    occ = '1'
                if not occ.isdigit():
                    raise BcfParseError(f"malformed order entry {entry!r}", number)
                refs.append((pid, int(occ)))
            raw_orders[vid] = refs
            doc_lines['order'][vid] = number

        else:
            raise BcfParseError(f"unknown keyword {keyword!r}", number)

    if not polygons:
        raise BcfParseError("no polygons")

    orders: Dict[str, List[Germ]] = {}
    for vid, refs in raw_orders.items():
        number = doc_lines['order'][vid]
        germs = []
        for pid, occ in refs:
            if pid not in polygons:
                raise BcfParseError(f"order at {vid} references unknown polygon {pid}", number)
            slots = [s for s, v in enumerate(polygons[pid]) if v == vid]
            if not slots:
                raise BcfParseError(f"order at {vid} references {pid}, which has no germ at {vid}",
                                    number, doc_lines['polygon'][pid])
            if not 1 <= occ <= len(slots):
                raise BcfParseError(f"order at {vid} references occurrence {occ} of {pid}, "
                                    f"which has {len(slots)} germs there",
                                    number, doc_lines['polygon'][pid])
            germs.append(Germ(pid, slots[occ - 1]))
        orders[vid] = germs

    cfg = BrauerConfig.from_dicts(vertices, polygons, orders)
    logging.debug(f"parsed {len(vertices)} vertices and {len(polygons)} polygons")
    return BcfDocument(cfg, doc_lines['vertex'], doc_lines['polygon'], doc_lines['order'], text)


def load_bcf(path) -> BcfDocument:
    return parse_bcf(Path(path).read_text(encoding='utf-8'))


def serialize_bcf(cfg: BrauerConfig) -> str:
    """Canonical text: declaration order kept, orders rotated to their least germ."""

    lines = []
    for v, m in cfg.vertices:
        lines.append(f"vertex {v}" + (f" mult={m}" if m != 1 else ""))
    for x, members in cfg.polygons:
        lines.append(f"polygon {x} : {' '.join(members)}")
    for v in cfg.vertex_ids:
        if cfg.valency(v) < 2:
            continue
        entries = [f"{g.polygon}.{cfg.occurrence(g)}" for g in cfg.canonical_order(v)]
        lines.append(f"order {v} : {' '.join(entries)}")
    return "\n".join(lines) + "\n"
