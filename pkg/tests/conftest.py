import pytest

from lfdyn import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # Compile (or load from disk cache) every jitted kernel up front so
    # timed tests measure computation, not JIT latency.
    _kernels.warm_up()
