"""Chiplet-aware quantum circuit compiler with a stratify-elaborate pipeline."""

try:
    from ._seqc import *  # noqa: F401,F403  (installed wheel layout)
    from ._seqc import __doc__  # noqa: F401
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _seqc import *  # noqa: F401,F403

__version__ = "0.1.0"
