"""Collections of p-subgroups, their nerves, and the edge verifier."""

import json

from ._sclab import (
    CapExceeded,
    Error,
    Group,
    IOError,
    ParseError,
    PrimeDoesNotDivide,
    SizeCap,
    UnknownBuiltin,
    builtin_names,
    collection_kinds,
)

__all__ = [
    "CapExceeded",
    "Error",
    "Group",
    "IOError",
    "ParseError",
    "PrimeDoesNotDivide",
    "SizeCap",
    "UnknownBuiltin",
    "builtin_names",
    "collection_kinds",
    "load_group",
    "conditions",
    "homology",
    "verify",
]


def load_group(source, max_order=0):
    return Group(source, max_order)


def conditions(group, p):
    return json.loads(group.conditions_json(p))


def homology(group, p, kind):
    return json.loads(group.homology_json(p, kind))


def verify(group, p, suite="all", jobs=1):
    """Full report as a dict, same schema as the command-line JSON."""
    return json.loads(group.verify(p, suite, "json", jobs))
