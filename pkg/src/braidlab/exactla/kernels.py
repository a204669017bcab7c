"""Backend selection for the integer polynomial kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module is used.  Setting ``BRAIDLAB_PURE_PYTHON=1``
forces the fallback (the benchmark and the backend-equivalence tests use it).
"""

import os

if os.environ.get("BRAIDLAB_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        from . import _pykernels as _impl

BACKEND = _impl.BACKEND

p_trim = _impl.p_trim
p_add = _impl.p_add
p_sub = _impl.p_sub
p_neg = _impl.p_neg
p_scale = _impl.p_scale
p_mul = _impl.p_mul
p_content = _impl.p_content
p_divint = _impl.p_divint
p_val = _impl.p_val
p_shift = _impl.p_shift
p_divexact = _impl.p_divexact
p_prem = _impl.p_prem
p_primitive = _impl.p_primitive
p_gcd = _impl.p_gcd
p_eval = _impl.p_eval
rf_normalize = _impl.rf_normalize
rf_add = _impl.rf_add
rf_sub = _impl.rf_sub
rf_mul = _impl.rf_mul
rf_div = _impl.rf_div

__all__ = [
    "BACKEND", "p_trim", "p_add", "p_sub", "p_neg", "p_scale", "p_mul",
    "p_content", "p_divint", "p_val", "p_shift", "p_divexact", "p_prem",
    "p_primitive", "p_gcd", "p_eval", "rf_normalize", "rf_add", "rf_sub",
    "rf_mul", "rf_div",
]
