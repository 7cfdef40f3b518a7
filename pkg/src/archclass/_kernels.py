"""Select the polynomial kernel implementation at import time.

The compiled module is used when it was built; setting the environment
variable ``ARCHCLASS_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

from . import _polyz as pure

compiled = None
if not os.environ.get("ARCHCLASS_PURE_PYTHON"):
    try:
        from . import _polyz_c as compiled
    except ImportError:
        compiled = None

kernels = compiled if compiled is not None else pure
BACKEND = "cython" if compiled is not None else "python"
