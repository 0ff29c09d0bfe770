import pytest

from gqlrc.codes import code_from_matrix
from gqlrc.gf import field_create
from gqlrc.gq import build_gq
from gqlrc.pgeom import incidence_matrix_spaces


@pytest.fixture(scope="session")
def fano():
    return code_from_matrix(incidence_matrix_spaces(field_create(2), 2, 1).matrix, 2)


@pytest.fixture(scope="session")
def q42():
    return build_gq("te-conic", 2)


@pytest.fixture(scope="session")
def q43():
    return build_gq("te-conic", 3)
