"""Exact verification of truncated q-hypergeometric congruences.

>>> from qcongr import builtin, verify
>>> verify(builtin("th-2", d=2, n=5)).outcome.value
'PASS'
"""

from .claims import Outcome, builtin, names, scan, verify
from .dsl import lower, parse
from .quotient import cyclotomic_ring

__version__ = "0.1.0"

__all__ = ["Outcome", "builtin", "cyclotomic_ring", "lower", "names", "parse", "scan", "verify"]
