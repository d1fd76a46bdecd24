import pytest

from superdegen.catalog import load_catalog
from superdegen.graph import load_default_graph


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def graph(catalog):
    return load_default_graph(catalog)
