"""Pick between the compiled kernels and the numpy implementations.

The compiled module ``qgraph._core`` is optional. When it imports, it runs
every algorithm in the deterministic finder modes (Classical, IdealQuantum);
DHSim always takes the numpy path because it needs the random stream.

Set ``QGRAPH_BACKEND=python`` to force the numpy path.
"""

import contextlib
import os

try:
    from qgraph import _core
except ImportError:  # extension not built
    _core = None

HAVE_CORE = _core is not None

_choice = os.environ.get("QGRAPH_BACKEND", "auto").lower()


def set_backend(name: str) -> None:
    global _choice
    name = name.lower()
    if name not in ("auto", "python", "compiled"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and not HAVE_CORE:
        raise RuntimeError("compiled core is not available; build with `pip install -e .`")
    _choice = name


def get_backend() -> str:
    if _choice == "python" or not HAVE_CORE:
        return "python"
    return "compiled"


@contextlib.contextmanager
def use_backend(name: str):
    old = _choice
    set_backend(name)
    try:
        yield
    finally:
        set_backend(old)


def core_for(mode):
    """The compiled module if ``mode`` can run on it, else None."""
    if mode.code is None or get_backend() != "compiled":
        return None
    return _core
