"""Size caps for enumeration and extension builds.

Every cap can be overridden through an environment variable named
``SEXT_CAP_<NAME>`` (for example ``SEXT_CAP_UPSILON=5``).
"""

import os

DEFAULT_CAPS = {
    # ground-set size for the upfamily bitmask machinery
    "ground": 8,
    # full enumeration, by class
    "enum_upfamily": 4,
    "enum_linked": 4,
    "enum_maximal_linked": 6,
    "enum_filter": 6,
    "enum_ultrafilter": 6,
    # extension builds, by class (order of the base semigroup)
    "beta": 64,
    "phi": 10,
    "n2": 5,
    "lambda": 6,
    "upsilon": 4,
}


def cap(name: str) -> int:
    value = os.environ.get(f"SEXT_CAP_{name.upper()}")
    if value is not None:
        return int(value)
    return DEFAULT_CAPS[name]
