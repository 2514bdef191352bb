import os

import pytest


skip_unless_slow = pytest.mark.skipif(
        'WMCLAB_SLOW_TESTS' not in os.environ,
        reason='Slow tests not requested')
