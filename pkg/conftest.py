# -------------------------------------------------
# pytest root configuration: makes the packages importable from the
# repository root and registers the slow marker.
# -------------------------------------------------

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full pipeline reproductions (deselect with -m 'not slow')")
