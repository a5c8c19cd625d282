from __future__ import annotations

import sys
from pathlib import Path

import pytest

from egolens.adapters.dblp import parse_dblp
from egolens.adapters.edgelist import load_edge_list
from egolens.config import load_config

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def dblp_dataset():
    with open(DATA_DIR / "dblp_fixture.xml", encoding="utf-8") as handle:
        return parse_dblp(handle)


@pytest.fixture(scope="session")
def dblp_config():
    return load_config(DATA_DIR / "dblp.cfg")


@pytest.fixture(scope="session")
def wiki_dataset():
    attrs = (DATA_DIR / "wiki_attrs.tsv").read_text(encoding="utf-8")
    with open(DATA_DIR / "wiki.tsv", encoding="utf-8") as handle:
        return load_edge_list(handle, period_length=1, attributes=attrs)


@pytest.fixture(scope="session")
def wiki_config():
    return load_config(DATA_DIR / "wiki.cfg")


def pytest_runtest_logreport(report):
    """One visible pass/fail line per acceptance criterion."""
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    outcome = "PASS" if report.passed else "FAIL"
    name = report.nodeid.split("::")[-1]
    sys.stderr.write(f"[{outcome}] {name}\n")
