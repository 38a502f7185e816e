from hypothesis import strategies as st

from mfq.algebra import STANDARD, Quaternion

coef = st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False)
quaternions = st.builds(lambda w, x, y, z: Quaternion(w, x, y, z, STANDARD), coef, coef, coef, coef)


# one summary line per acceptance criterion, shown even when output is captured
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
