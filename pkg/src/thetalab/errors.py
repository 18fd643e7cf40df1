"""Error hierarchy shared across the toolkit.

Every domain error derives from ThetaLabError and carries a stable
machine-readable code, used by the CLI to render one-line errors.
"""
from __future__ import annotations

import re

_CAMEL = re.compile(r"(?<=[a-z0-9])(?=[A-Z])")


class ThetaLabError(Exception):
    """Base class for all domain errors raised by the library."""

    @property
    def code(self) -> str:
        return _CAMEL.sub("_", type(self).__name__).upper()
