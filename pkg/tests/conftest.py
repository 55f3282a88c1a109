"""Shared fixtures: the matrix groups and pipeline tables are expensive
enough to build once per session."""

import time

import pytest

from xnx1.databundle import load_bundle
from xnx1.frobenius import build_context, calibrate, default_sample, verify_range
from xnx1.groups import build_group


@pytest.fixture(scope="session")
def group2():
    return build_group(2)


@pytest.fixture(scope="session")
def group1():
    return build_group(1)


@pytest.fixture(scope="session")
def bundle():
    return load_bundle()


@pytest.fixture(scope="session")
def ctx():
    return build_context()


@pytest.fixture(scope="session")
def choice(ctx, bundle):
    sample = default_sample(list(bundle.f5), list(bundle.h))
    return calibrate(ctx, list(bundle.f5), list(bundle.h), sample)


@pytest.fixture(scope="session")
def sweep_small(ctx, choice, bundle):
    return verify_range(
        2000, ctx, choice, list(bundle.f5), list(bundle.g), list(bundle.h)
    )


@pytest.fixture(scope="session")
def sweep_full(ctx, choice, bundle):
    """The full p < 10^5 sweep plus its wall-clock duration in seconds."""
    t0 = time.monotonic()
    agg = verify_range(
        100_000, ctx, choice, list(bundle.f5), list(bundle.g), list(bundle.h)
    )
    return agg, time.monotonic() - t0
