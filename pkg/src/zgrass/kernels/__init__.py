"""Hot inner loops, compiled when the Cython extension is built.

The compiled module is preferred at import; set ``ZGRASS_PURE_PYTHON=1`` to force
the pure-Python fallback. ``BACKEND`` names the implementation in use.
"""
import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("ZGRASS_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

_impl = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

word_sign = _impl.word_sign
mul_words = _impl.mul_words
mul_dicts = _impl.mul_dicts
perm_signs = _impl.perm_signs
first_nonzero = _impl.first_nonzero

__all__ = ["BACKEND", "word_sign", "mul_words", "mul_dicts", "perm_signs", "first_nonzero",
           "python_backend", "compiled_backend"]
