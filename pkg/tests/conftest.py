import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session", autouse=True)
def _orbit_cache(tmp_path_factory):
    # keep orbit caches out of the user's home directory
    os.environ["MOSAIC_CACHE_DIR"] = str(tmp_path_factory.mktemp("orbit-cache"))
    yield
