import pytest
from hypothesis import settings

from bisoft.fixtures import load_fixture
from bisoft.softset import Context, SoftSet, extend_parameters

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def fx():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = load_fixture(name)
        return cache[name]

    return get


@pytest.fixture(scope="session")
def space_of(fx):
    def get(fixture_name, space_name="S"):
        return fx(fixture_name).space(space_name)

    return get


def make_soft(ctx: Context, **table) -> SoftSet:
    """Shorthand: make_soft(ctx, e1="h1 h2", e2="") from space-separated names."""
    return extend_parameters(
        {k: (v.split() if v else []) for k, v in table.items()}, ctx
    )
