"""Kernel selection: compiled extension when available, numpy fallback otherwise.

Set BS_PURE=1 to force the fallback regardless of what is installed.
"""

import os

from . import pure

if os.environ.get("BS_PURE") == "1":
    impl = pure
    HAVE_SPEEDUPS = False
else:
    try:
        from . import _speedups as impl
        HAVE_SPEEDUPS = True
    except ImportError:
        impl = pure
        HAVE_SPEEDUPS = False

enumerate_packed = impl.enumerate_packed
path_counts = pure.path_counts
