"""Python bindings for the alpha-NLS wave-packet laboratory."""

try:
    from ._nlslab import *  # noqa: F401,F403  (installed layout)
    from . import _nlslab as _impl
except ImportError:
    from _nlslab import *  # noqa: F401,F403  (build-tree layout)
    import _nlslab as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
