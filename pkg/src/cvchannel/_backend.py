"""Select the Volterra core at import: compiled extension if built, else NumPy.

Set ``CVCHANNEL_BACKEND=python`` to force the fallback (used by the
benchmark to time both cores in one process).
"""
import os

if os.environ.get("CVCHANNEL_BACKEND", "").lower() == "python":
    from . import _volterra_py as core
else:
    try:
        from . import _volterra as core  # type: ignore[attr-defined]
    except ImportError:
        from . import _volterra_py as core

BACKEND = core.BACKEND_NAME
center_amplitude_loop = core.center_amplitude_loop
coupled_pair_loop = core.coupled_pair_loop
