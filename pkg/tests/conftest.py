import pytest

from homoggb import free_algebra, polynomial_ring


@pytest.fixture
def Rxy():
    # x is the highest-precedence variable
    return polynomial_ring(("x", "y"))


@pytest.fixture
def Rxyt():
    return polynomial_ring(("x", "y"), homog_var="t")


@pytest.fixture
def Fxy():
    return free_algebra(("X", "Y"))


@pytest.fixture
def FxyT():
    return free_algebra(("X", "Y"), homog_var="T")
