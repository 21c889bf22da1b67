import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from addax.scalar import Scalar

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

ORACLE_PATH = Path(__file__).parent / "oracles" / "frozen.json"

small_fractions = st.builds(
    Fraction, st.integers(-12, 12), st.integers(1, 9)
)
scalars = st.builds(Scalar, small_fractions, small_fractions)
real_scalars = st.builds(Scalar, small_fractions)
nonzero_scalars = scalars.filter(bool)


@pytest.fixture(scope="session")
def oracle():
    return json.loads(ORACLE_PATH.read_text())


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        title, ok, detail = RESULTS[number]
        line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
