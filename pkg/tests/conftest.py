import mpmath
import pytest
from hypothesis import settings

from isocs.fock import FockSpace

settings.register_profile("isocs", max_examples=40, deadline=None)
settings.load_profile("isocs")
mpmath.mp.dps = 40


@pytest.fixture
def space2():
    return FockSpace(2.0, 64)


@pytest.fixture(params=[1.5, 2.0, 2.5])
def gamma(request):
    return request.param
