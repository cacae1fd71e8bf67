import pytest


@pytest.fixture
def announce(request):
    """Print a line on the real terminal, bypassing pytest's capture."""
    capman = request.config.pluginmanager.getplugin("capturemanager")

    def _announce(line):
        if capman is None:
            print(line, flush=True)
        else:
            with capman.global_and_fixture_disabled():
                print(line, flush=True)

    return _announce
