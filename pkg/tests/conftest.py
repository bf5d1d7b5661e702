import json
from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def golden():
    def load(name):
        return json.loads((GOLDEN / name).read_text())

    return load
