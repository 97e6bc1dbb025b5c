from __future__ import annotations

import pytest

from metabicay.verify import SUITES, run


@pytest.mark.parametrize("suite", list(SUITES))
def test_small_suites_pass(suite):
    checks = run(suite, small=True)
    assert checks and all(c.ok for c in checks), [c.line() for c in checks if not c.ok]


@pytest.mark.slow
@pytest.mark.parametrize("suite", list(SUITES))
def test_full_suites_pass(suite):
    checks = run(suite, small=False)
    assert all(c.ok for c in checks), [c.line() for c in checks if not c.ok]
