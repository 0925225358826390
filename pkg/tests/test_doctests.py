import doctest
import importlib

import pytest

MODULES = ["sympow.presentations", "sympow.fibonacci", "sympow.algebra.f2",
           "sympow.algebra.intmat", "sympow.algebra.polynomial"]


@pytest.mark.parametrize("name", MODULES)
def test_docstring_examples(name):
    result = doctest.testmod(importlib.import_module(name))
    assert result.attempted and not result.failed
