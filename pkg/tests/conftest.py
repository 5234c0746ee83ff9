import pytest

E3 = (1, 2, 5, 15, 51, 191, 772, 3320)
C3 = (1, 2, 5, 15, 52, 202, 859, 3930)
AW = (1, 2, 5, 15, 51, 191, 773, 3336)


@pytest.fixture
def e3_values():
    return E3
