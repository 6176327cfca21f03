import pytest


def pytest_addoption(parser):
    """
    Adds custom command-line options:
    - `--print-results` to control result printing.
    - `--run-slow` to run the long simulation studies.
    """
    parser.addoption(
        "--print-results", action="store_true", default=False,
        help="Print test results to stdout"
    )
    parser.addoption(
        "--run-slow", action="store_true", default=False,
        help="Run tests marked as slow"
    )


def pytest_collection_modifyitems(config, items):
    """Skips tests marked `slow` unless `--run-slow` is given."""
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def print_results(request):
    """
    Fixture to check if the `--print-results` flag is set.
    """
    return request.config.getoption("--print-results")


@pytest.fixture
def run_slow(request):
    """
    Fixture to check if the `--run-slow` flag is set.
    """
    return request.config.getoption("--run-slow")
