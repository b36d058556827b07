# src/brauerwalk/core/settings.py

from typing import Dict, List, Mapping, Optional
from dataclasses import dataclass, replace
import logging
import os

from .errors import InputError

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


@dataclass(frozen=True)
class WalkerConfig:
    prime: int = 32003
    seed: int = 0
    max_len: int = 24
    multiplicity_cap: int = 16
    dimension_cap: int = 512
    exact_hom_threshold: int = 3
    certification_bits: int = 40
    walk_step_cap: Optional[int] = None
    log_level: str = "WARNING"
    log_file: Optional[str] = None

    def validate(self) -> List[str]:

        problems = []
        if not _is_prime(self.prime):
            problems.append(f"prime {self.prime} is not prime")
        if self.prime <= self.dimension_cap:
            problems.append("prime must exceed the dimension cap")
        for name in ('max_len', 'multiplicity_cap', 'dimension_cap', 'certification_bits'):
            if getattr(self, name) <= 0:
                problems.append(f"{name} must be positive")
        if self.exact_hom_threshold < 0:
            problems.append("exact_hom_threshold must be non-negative")
        if self.log_level.upper() not in logging._nameToLevel:
            problems.append(f"unknown log level {self.log_level}")
        return problems

    def with_overrides(self, **overrides) -> 'WalkerConfig':
        cleaned = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **cleaned)


def default_config(env: Optional[Mapping[str, str]] = None) -> WalkerConfig:

    env = os.environ if env is None else env
    values: Dict = {}

    for key, field, cast in (
        ('BRAUERWALK_SEED', 'seed', int),
        ('BRAUERWALK_PRIME', 'prime', int),
        ('BRAUERWALK_LOG_LEVEL', 'log_level', str),
    ):
        raw = env.get(key)
        if raw is None or raw == "":
            continue
        try:
            values[field] = cast(raw)
        except ValueError:
            raise InputError(f"{key}={raw!r} is not a valid {field}")

    config = WalkerConfig(**values)
    problems = config.validate()
    if problems:
        raise InputError("; ".join(problems))
    return config


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True
