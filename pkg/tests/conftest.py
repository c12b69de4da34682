import pytest

from gaussian_codes import ResidueRing, build_half_code, build_multiprime_code


@pytest.fixture(scope="session")
def ring25():
    return ResidueRing.prime_power(5, 2)


@pytest.fixture(scope="session")
def ring65():
    return ResidueRing.product([5, 13])


@pytest.fixture(scope="session")
def example1_code():
    return build_half_code(5, 2, roots=[2, (1, -1)])


@pytest.fixture(scope="session")
def example2_code():
    return build_multiprime_code([5, 13], 1, root=(3, 1))


_acceptance_results = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance_results[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_results.items():
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
