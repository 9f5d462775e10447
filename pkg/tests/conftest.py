from __future__ import annotations

import pytest

from helpers import load_fixture


@pytest.fixture
def fs2():
    return load_fixture("fs2")


@pytest.fixture
def fs4():
    return load_fixture("fs4")


@pytest.fixture
def boldbanana():
    return load_fixture("boldbanana")


@pytest.fixture
def square():
    return load_fixture("square")


@pytest.fixture
def fs4tail():
    return load_fixture("fs4tail")
