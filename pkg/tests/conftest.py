import pytest

from pwlie.cache import ENV_VAR


@pytest.fixture(autouse=True, scope="session")
def _isolated_cache_dir(tmp_path_factory):
    """Keep the default on-disk cache out of the user's home during tests."""
    mp = pytest.MonkeyPatch()
    mp.setenv(ENV_VAR, str(tmp_path_factory.mktemp("pwlie-cache")))
    yield
    mp.undo()


_ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = []


@pytest.fixture
def acceptance_lines(request):
    return request.config.stash[_ACCEPTANCE]


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(lines):
        terminalreporter.write_line(line)
