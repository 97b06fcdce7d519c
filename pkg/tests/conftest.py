from fractions import Fraction

from hypothesis import strategies as st

from lacuna.qseries import QSeries

rationals = st.builds(Fraction, st.integers(-2000, 2000), st.integers(1, 40))


@st.composite
def qseries(draw, precision=None, max_precision=30):
    n = precision if precision is not None else draw(st.integers(1, max_precision))
    return QSeries(draw(st.lists(rationals, min_size=n, max_size=n)))


@st.composite
def series_triples(draw, max_precision=30):
    n = draw(st.integers(1, max_precision))
    return tuple(draw(qseries(precision=n)) for _ in range(3))


def q(*coeffs):
    return QSeries(Fraction(c) for c in coeffs)


ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def record(name, ok, detail=""):
    ACCEPTANCE[name] = (bool(ok), detail)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0][1:])):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
