import pytest

from foxeq.zeros import load_zeros


@pytest.fixture(scope="session")
def table():
    return load_zeros()


@pytest.fixture(scope="session")
def acceptance_log(request):
    lines = getattr(request.config, "_acceptance_lines", None)
    if lines is None:
        lines = {}
        request.config._acceptance_lines = lines
    return lines


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(lines):
        terminalreporter.write_line(lines[key])


@pytest.fixture(scope="session")
def registry_results(table):
    """Every registered check at default settings, run once per session."""
    from foxeq.identities import REGISTRY, run_checks

    results = run_checks(list(REGISTRY.values()), table)
    by_name = {}
    for r in results:
        by_name.setdefault(r.name, []).append(r)
    return by_name
