# src/brauerwalk/core/generators.py

from typing import Dict, List

import numpy as np

from .configuration import BrauerConfig, Germ


def _orders(polygons: Dict[str, List[str]], rng: np.random.Generator) -> Dict[str, List[Germ]]:

    incident: Dict[str, List[Germ]] = {}
    for x, vertices in polygons.items():
        for slot, v in enumerate(vertices):
            incident.setdefault(v, []).append(Germ(x, slot))
    orders = {}
    for v, germs in incident.items():
        perm = rng.permutation(len(germs))
        orders[v] = [germs[i] for i in perm]
    return orders


def _grow(rng: np.random.Generator, count: int, sizes: List[int], fresh_bias: float) -> Dict[str, List[str]]:
    """Connected polygons: each new polygon reuses at least one existing vertex."""

    polygons: Dict[str, List[str]] = {}
    vertices: List[str] = []

    def fresh() -> str:
        name = f"v{len(vertices) + 1}"
        vertices.append(name)
        return name

    for i in range(count):
        size = int(rng.choice(sizes))
        if not vertices:
            members = [fresh() for _ in range(size)]
        else:
            members = [vertices[int(rng.integers(len(vertices)))]]
            for _ in range(size - 1):
                if rng.random() < fresh_bias:
                    members.append(fresh())
                else:
                    members.append(vertices[int(rng.integers(len(vertices)))])
        polygons[f"x{i + 1}"] = members
    return polygons


def random_configuration(rng: np.random.Generator, max_polygons: int = 8,
                         max_multiplicity: int = 3) -> BrauerConfig:
    """A valid, connected, non-exceptional configuration with polygons of size 2 to 4."""

    count = int(rng.integers(2, max_polygons + 1))
    polygons = _grow(rng, count, [2, 2, 3, 4], 0.6)

    valency: Dict[str, int] = {}
    for members in polygons.values():
        for v in members:
            valency[v] = valency.get(v, 0) + 1

    multiplicity = {v: int(rng.integers(1, max_multiplicity + 1)) for v in sorted(valency)}
    for members in polygons.values():
        if len(members) <= 2:
            continue
        for v in members:
            if valency[v] == 1 and multiplicity[v] == 1:
                multiplicity[v] = 2 if max_multiplicity >= 2 else 1

    cfg = BrauerConfig.from_dicts(multiplicity, polygons, _orders(polygons, rng))
    return cfg.require_valid()


def random_brauer_graph(rng: np.random.Generator, edges: int, max_multiplicity: int = 2) -> BrauerConfig:
    """A valid connected Brauer graph (every polygon a 2-gon) with the given number of edges."""

    polygons = _grow(rng, max(edges, 2), [2], 0.5)
    vertices = sorted({v for members in polygons.values() for v in members})
    multiplicity = {v: int(rng.integers(1, max_multiplicity + 1)) for v in vertices}
    cfg = BrauerConfig.from_dicts(multiplicity, polygons, _orders(polygons, rng))
    return cfg.require_valid()
