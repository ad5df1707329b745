"""Sharply n-transitive permutation groups.

Finite sharply 2- and 3-transitive groups, near-fields and near-domains,
involution/characteristic/splitting analysis, free-product word arithmetic,
and the stagewise partial-action construction in characteristic 2.
"""

from sharply._core import *  # noqa: F401,F403
from sharply._core import construct, freeprod, proj  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
