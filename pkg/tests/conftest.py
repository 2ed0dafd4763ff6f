import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lprevise.syntax import Literal, Program, Rule, parse_program

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def literals(atoms="abcd"):
    return st.builds(Literal, st.sampled_from(list(atoms)), st.booleans())


@st.composite
def rules(draw, atoms="abcd", max_body=3):
    pos = draw(st.frozensets(literals(atoms), max_size=max_body))
    neg = draw(st.frozensets(literals(atoms), max_size=max_body))
    if pos or neg:
        head = draw(st.one_of(st.none(), literals(atoms), literals(atoms)))
    else:
        head = draw(literals(atoms))
    return Rule(head, pos, neg)


def programs(atoms="abcd", max_rules=5):
    return st.lists(rules(atoms), max_size=max_rules).map(lambda rs: Program(tuple(rs)))


@pytest.fixture
def P():
    return parse_program


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
