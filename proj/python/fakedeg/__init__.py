"""Fake degrees of classical Weyl groups, domino tableaux and major index."""

import json

from . import _core
from ._core import (
    InternalError,
    domino_images,
    enumerate_sdt,
    fake_degree_bc,
    fake_degree_d,
    fake_degree_wreath,
    flip,
    lusztig_rho1,
    lusztig_rho2,
    pair_maj,
    poincare_polynomial,
    regular_representation_sum,
    special_partner_bc,
    special_partner_d,
    suite_names,
    tuple_maj,
)


def run_suite(suite, max_n):
    """Run a verification suite; returns (failures, records, notes) with records as dicts."""
    failures, records, notes = _core.run_suite(suite, max_n)
    return failures, [json.loads(r) for r in records], notes


__all__ = [
    "InternalError",
    "domino_images",
    "enumerate_sdt",
    "fake_degree_bc",
    "fake_degree_d",
    "fake_degree_wreath",
    "flip",
    "lusztig_rho1",
    "lusztig_rho2",
    "pair_maj",
    "poincare_polynomial",
    "regular_representation_sum",
    "run_suite",
    "special_partner_bc",
    "special_partner_d",
    "suite_names",
    "tuple_maj",
]
