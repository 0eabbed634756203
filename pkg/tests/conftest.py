import pytest

from tnspectrum import spectrum


@pytest.fixture(scope="session")
def spectra_up_to_30():
    """Exact spectra for n = 2..30, shared across the closed-form checks."""
    return {n: spectrum(n) for n in range(2, 31)}
