import os
import sys

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from src.brauerwalk.algebra.quiver_algebra import build_algebra
from src.brauerwalk.io.bcf import load_bcf

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                           'src', 'brauerwalk', 'fixtures')


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURE_DIR, f"{name}.bcf")


def load_config(name: str):
    return load_bcf(fixture_path(name)).config


def load_algebra(name: str):
    return build_algebra(load_config(name))
