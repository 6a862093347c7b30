import pytest

from testideals import groebner


@pytest.fixture(autouse=True, scope="session")
def verify_every_basis():
    """Re-check every reduced basis the suite builds against the S-polynomial
    criterion (buchberger raises if any S-polynomial fails to reduce to 0)."""
    old = groebner.VERIFY_BASES
    groebner.VERIFY_BASES = True
    yield
    groebner.VERIFY_BASES = old
