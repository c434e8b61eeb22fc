"""Shared fixtures: the fully enumerated Sz(8) world, built once per session.

The heavyweight artifacts (closure table, order census, partition report)
record their wall-clock build times so the acceptance tests can assert the
runtime budgets without recomputing anything.
"""

from time import perf_counter
from types import SimpleNamespace

import pytest

from szq.field import Field
from szq.group import make_params
from szq.oracle import build_suzuki_table, empirical_order_stats, verify_partition
from szq.orderstats import spectrum_closed_form


@pytest.fixture(scope="session")
def field8():
    return Field(1)


@pytest.fixture(scope="session")
def params8():
    return make_params(1)


@pytest.fixture(scope="session")
def sz8(field8, params8):
    """Generators, closure table, and census of Sz(8), with build timings."""
    t0 = perf_counter()
    gens, table = build_suzuki_table(params8, field8)
    closure_seconds = perf_counter() - t0
    t0 = perf_counter()
    stats = empirical_order_stats(table, spectrum_closed_form(params8))
    census_seconds = perf_counter() - t0
    return SimpleNamespace(
        field=field8,
        params=params8,
        generators=gens,
        table=table,
        stats=stats,
        closure_seconds=closure_seconds,
        census_seconds=census_seconds,
    )


@pytest.fixture(scope="session")
def sz8_partition(sz8):
    """Partition report for Sz(8) plus the seconds it took to compute."""
    t0 = perf_counter()
    report = verify_partition(sz8.table, sz8.params)
    return SimpleNamespace(report=report, seconds=perf_counter() - t0)
