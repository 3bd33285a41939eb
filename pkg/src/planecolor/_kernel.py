"""Search-kernel backend selection.

The compiled extension (``_kernel_c``) is preferred; the pure-Python twin is
used when the extension is unavailable or when ``PLANECOLOR_BACKEND=python``
is set.  ``PLANECOLOR_BACKEND=c`` insists on the extension and fails loudly
if it did not build.
"""

import os

from . import _kernel_py

_choice = os.environ.get("PLANECOLOR_BACKEND", "").lower()

if _choice == "python":
    impl = _kernel_py
elif _choice == "c":
    from . import _kernel_c as impl  # noqa: F401  (ImportError is the point)
else:
    try:
        from . import _kernel_c as impl
    except ImportError:
        impl = _kernel_py

STATUS_DONE = _kernel_py.STATUS_DONE
STATUS_TIMEOUT = _kernel_py.STATUS_TIMEOUT

search = impl.search
brute = impl.brute


def backend_name() -> str:
    return "c" if impl.__name__.endswith("_kernel_c") else "python"
