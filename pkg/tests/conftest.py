import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture(params=["python", "cython"])
def backend(request):
    from fibsum import kernels

    if request.param not in kernels.BACKENDS:
        pytest.skip("compiled kernels not built")
    return kernels.get_backend(request.param)
