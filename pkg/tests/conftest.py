import json
import pathlib

import pytest

from citemetrics.fixture import load_fixture

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def mjm():
    """The bundled sample dataset: a five-by-seven year matrix with both
    unique-new-journal blocks."""
    return load_fixture(DATA / "mjm_fixture.json")


@pytest.fixture()
def mjm_doc():
    """Raw fixture document, reloaded per test so mutation is safe."""
    return json.loads((DATA / "mjm_fixture.json").read_text())


@pytest.fixture(scope="session")
def golden_report_csv():
    return (DATA / "mjm_report_golden.csv").read_text()
