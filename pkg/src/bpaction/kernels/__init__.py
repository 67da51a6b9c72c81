"""Hot loops over packed monomial keys.

The numba backend is used when numba imports and the environment variable
``BPACTION_DISABLE_NUMBA`` is unset (or ``0``); otherwise the pure numpy
backend is used.  Both expose the same functions.
"""

import os

from . import _numpy
from ._layout import (deg_shift, field_bits, max_degree, max_exponent,
                      unit_key, var_shift)

_disabled = os.environ.get("BPACTION_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

backend = _numpy
BACKEND = "numpy"
if not _disabled:
    try:
        from . import _numba
    except ImportError:  # numba missing from the environment
        pass
    else:
        backend = _numba
        BACKEND = "numba"

parity_reduce = backend.parity_reduce
mul_keys = backend.mul_keys
divide_keys = backend.divide_keys
transvect_keys = backend.transvect_keys
sq_keys = backend.sq_keys
total_square_keys = backend.total_square_keys

__all__ = [
    "BACKEND", "backend", "parity_reduce", "mul_keys", "divide_keys",
    "transvect_keys", "sq_keys", "total_square_keys", "field_bits",
    "deg_shift", "var_shift", "unit_key", "max_exponent", "max_degree",
]
