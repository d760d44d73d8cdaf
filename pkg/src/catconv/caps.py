"""Size caps for enumeration and exhaustive verification.

Defaults can be overridden with the ``CATCONV_CAPS`` environment variable,
a comma separated list of ``key=value`` pairs, e.g.
``CATCONV_CAPS="free=22,balanced=11"``.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass

from .errors import CapExceeded

ENV_VAR = "CATCONV_CAPS"


@dataclass(frozen=True)
class Caps:
    # raw enumerators in catconv.paths
    paths_length: int = 24
    paths_parameter: int = 12
    # exhaustive verification
    free: int = 20
    balanced: int = 10
    dyck: int = 12
    # numeric verification index
    numeric: int = 20
    # triangle grid, in columns (4N <= triangle)
    triangle: int = 200

    @classmethod
    def from_env(cls, environ=None) -> "Caps":
        environ = os.environ if environ is None else environ
        raw = environ.get(ENV_VAR, "").strip()
        if not raw:
            return cls()
        names = {f.name for f in dataclasses.fields(cls)}
        values = {}
        for item in raw.split(","):
            key, sep, value = item.partition("=")
            key = key.strip()
            if not sep or key not in names:
                raise ValueError(f"bad {ENV_VAR} entry {item!r}")
            values[key] = int(value)
        return cls(**values)


def current() -> Caps:
    return Caps.from_env()


def check(what: str, requested: int, cap: int) -> None:
    if requested > cap:
        raise CapExceeded(what, requested, cap)
