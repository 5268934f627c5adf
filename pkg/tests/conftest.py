import pytest

from darseq.fixtures import (
    a2_algebra,
    triangle_algebra,
    triangle_F_subcat,
    triangle_figure1_modules,
    triangle_X_subcat,
)


@pytest.fixture(scope="session")
def tri_alg():
    return triangle_algebra()


@pytest.fixture(scope="session")
def fig1(tri_alg):
    return triangle_figure1_modules(tri_alg)


@pytest.fixture(scope="session")
def sub_F(tri_alg, fig1):
    return triangle_F_subcat(tri_alg, fig1)


@pytest.fixture(scope="session")
def sub_X(tri_alg, fig1):
    return triangle_X_subcat(tri_alg, fig1)
