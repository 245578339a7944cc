"""Select the row-reduction kernel implementation at import time.

The compiled ``_ckernel`` is used when it was built; setting the environment
variable ``Z2Z4_PURE_PYTHON=1`` forces the pure-Python kernel.
"""
import os

from . import _kernel_py

if os.environ.get("Z2Z4_PURE_PYTHON"):
    impl = _kernel_py
else:
    try:
        from . import _ckernel as impl
    except ImportError:
        impl = _kernel_py

BACKEND = impl.BACKEND
KIND_X = _kernel_py.KIND_X
KIND_UNIT = _kernel_py.KIND_UNIT
KIND_TWO = _kernel_py.KIND_TWO

add = _kernel_py.add
scale = _kernel_py.scale
entry = _kernel_py.entry
echelon = impl.echelon
reduce_word = impl.reduce_word
binary_echelon = impl.binary_echelon
span_words = impl.span_words
