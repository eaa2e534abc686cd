import os
import tempfile

# loggers attach their file handler at import time
os.environ.setdefault("PRODCHECK_LOG_FILE", os.path.join(tempfile.mkdtemp(prefix="prodcheck-logs-"), "test.log"))

import pytest  # noqa: E402

from prodcheck.algebras import resolve_builtin  # noqa: E402
from prodcheck.verify.runner import default_catalog  # noqa: E402

VPA_BUILTINS = ["cross0", "cross1", "cross3", "cross7"]
CA_BUILTINS = ["real", "complex", "quaternion", "octonion"]


@pytest.fixture(scope="session")
def catalog():
    return default_catalog()


@pytest.fixture(scope="session")
def cross3():
    return resolve_builtin("cross3")


@pytest.fixture(scope="session")
def cross7():
    return resolve_builtin("cross7")


@pytest.fixture(scope="session")
def quaternion():
    return resolve_builtin("quaternion")


@pytest.fixture(scope="session")
def octonion():
    return resolve_builtin("octonion")
