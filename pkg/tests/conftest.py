import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from subrec import zoo


@pytest.fixture
def fib():
    return zoo.FIBONACCI


@pytest.fixture
def tm():
    return zoo.THUE_MORSE


@pytest.fixture
def trib():
    return zoo.TRIBONACCI


@pytest.fixture
def coll():
    return zoo.COLLAPSING


@pytest.fixture
def per():
    return zoo.PERIODIC


@pytest.fixture
def morph_file(tmp_path):
    def write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write
