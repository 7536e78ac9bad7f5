import pytest

from hombox.zoo import BUILTIN_NAMES, builtin


@pytest.fixture(scope="session")
def builtins():
    return {name: builtin(name) for name in BUILTIN_NAMES}
