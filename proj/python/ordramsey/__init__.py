"""Ordered-graph Ramsey extraction: induced ordered patterns or co-bi-cliques,
with certificates that re-verify independently of the code that produced them."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
