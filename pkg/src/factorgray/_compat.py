"""Optional numba acceleration.

The tree-filling kernel is plain nopython-friendly code; when numba is
missing we simply run it as ordinary Python (same semantics, slower).
"""

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def wrapper(func):
            return func

        return wrapper
