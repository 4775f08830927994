"""Acceptance suite: one test per shipped guarantee, zero tolerance.

Each test prints its own PASS/FAIL line (run pytest with -s to see them);
the same checks back the CLI `verify` subcommand.
"""

import pytest

from donaldson_cp2.verify import CRITERIA

_BY_NAME = dict(CRITERIA)


@pytest.mark.parametrize("name", [name for name, _ in CRITERIA])
def test_acceptance(name):
    ok, detail = _BY_NAME[name]()
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    assert ok, f"{name}: {detail}"
