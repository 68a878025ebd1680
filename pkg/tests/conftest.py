import importlib
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))


def _backends():
    mods = [importlib.import_module("zolotarev._pykernels")]
    try:
        mods.append(importlib.import_module("zolotarev._ckernels"))
    except ImportError:
        pass
    return mods


BACKENDS = _backends()


@pytest.fixture(params=BACKENDS, ids=lambda m: m.BACKEND)
def kernels(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    results = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
