from __future__ import annotations

import pytest

from veinprune import Poset, fixtures


@pytest.fixture(scope="session")
def fx():
    return fixtures()


@pytest.fixture(scope="session")
def c3(fx):
    return fx["C3"]


@pytest.fixture(scope="session")
def yp(fx):
    return fx["Yp"]


@pytest.fixture(scope="session")
def vee(fx):
    return fx["Vee"]


@pytest.fixture(scope="session")
def b3(fx):
    return fx["B3"]


@pytest.fixture(scope="session")
def a2(fx):
    return fx["A2"]


@pytest.fixture(scope="session")
def bowtie():
    # two minimal elements below two maximal ones; no meets or joins
    return Poset.from_relations(
        "abcd", [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]
    )
