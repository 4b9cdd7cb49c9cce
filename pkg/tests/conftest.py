import json
from pathlib import Path

import pytest
from hypothesis import settings

from lvmb import fixtures

settings.register_profile("repo", derandomize=True, deadline=None, max_examples=100)
settings.load_profile("repo")

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def fx():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = fixtures.load(name)
        return cache[name]

    return get


def golden_text(name: str) -> str:
    return (GOLDEN / name).read_text()


def golden_json(name: str):
    return json.loads(golden_text(name))
