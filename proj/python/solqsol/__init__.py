"""Solitary and quotient-solitary subgroup lattices of small finite groups.

Thin wrapper over the C++ core. Group specs use the same grammar as the CLI:
C<n>, D<order>, Q8, SD<order>, S<n>, Ab(<p>:[a,...]), joined with 'x'.
"""

import json

try:
    from . import _core
except ImportError:  # development layout: extension built by CMake, on sys.path
    import _core

SpecError = _core.SpecError
CapError = _core.CapError

__all__ = [
    "show",
    "families",
    "sol",
    "qsol",
    "lattice_dot",
    "verify",
    "verify_all",
    "census",
    "claim_ids",
    "group_order",
    "SpecError",
    "CapError",
]


def show(spec):
    """Order, element-order histogram and structural flags of a group."""
    return json.loads(_core.show_json(spec))


def families(spec, which="qsol"):
    """Family report for one of sol|qsol|normal|char|subgroups."""
    return json.loads(_core.families_json(spec, which))


def sol(spec):
    """Members of the solitary family, as dicts with order/members/type."""
    return families(spec, "sol")["family"]["members"]


def qsol(spec):
    """Members of the quotient-solitary family."""
    return families(spec, "qsol")["family"]["members"]


def lattice_dot(spec, which="qsol"):
    """Graphviz DOT text of a family's Hasse diagram."""
    return _core.lattice_dot(spec, which)


def verify(claim_id):
    """Run one verification claim; returns the result record."""
    return json.loads(_core.verify_json(claim_id))["results"][0]


def verify_all():
    """Run the whole verification suite; returns the full report."""
    return json.loads(_core.verify_all_json())


def census(max_order=24, families_list=()):
    """Census rows (dicts), one per constructor-family group."""
    text = _core.census_jsonl(max_order, list(families_list))
    return [json.loads(line) for line in text.splitlines() if line]


def claim_ids():
    return list(_core.claim_ids())


def group_order(spec):
    return _core.group_order(spec)
