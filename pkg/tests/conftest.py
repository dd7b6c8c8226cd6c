import numpy as np
import pytest

from apimigrate import mocklib
from apimigrate.corpus import ApiEntry, ParamSpec
from apimigrate.runtime import MockRuntimeAdapter
from apimigrate.values import Tensor


@pytest.fixture(scope="session")
def source_corpus():
    return mocklib.build_source_corpus()


@pytest.fixture(scope="session")
def target_corpus():
    return mocklib.build_target_corpus()


@pytest.fixture()
def mock_runtime():
    return MockRuntimeAdapter()


@pytest.fixture(scope="session")
def conv_entry():
    """Conv2d-style entry: two required ints, pair kernel, optional pairs."""
    return ApiEntry(
        qualified_name="tgt.Conv2d",
        description="Two dimensional convolution over an input plane.",
        params=(
            ParamSpec("in_channels", "int", True),
            ParamSpec("out_channels", "int", True),
            ParamSpec("kernel_size", "int_pair", True),
            ParamSpec("stride", "int_pair", False, default=(1, 1)),
            ParamSpec("padding", "int_pair", False, default=(0, 0)),
        ),
    )
