import pytest

_criteria_key = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""
    lines = request.config.stash.setdefault(_criteria_key, [])
    state = {}

    def name(label):
        state["label"] = label

    yield name
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    lines.append(f"{'FAIL' if failed else 'PASS'}  {state.get('label', request.node.name)}")


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call":
        item.rep_call = rep
    return rep


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_criteria_key, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", help="run tests marked slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
