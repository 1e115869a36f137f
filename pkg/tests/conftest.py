import pytest

from sepmonad import Field, GF, load_preset, right_cosets, standard_ring, subgroup_generated

Q = Field(0)
F2 = GF(2)
F3 = GF(3)
F5 = GF(5)


def coset_space(name, gens=None):
    group, default = load_preset(name)
    h = subgroup_generated(group, default if gens is None else gens)
    return right_cosets(group, h)


@pytest.fixture(scope="session")
def s3_cs():
    return coset_space("s3")


@pytest.fixture(scope="session")
def s3_ring(s3_cs):
    return standard_ring(s3_cs, Q)


@pytest.fixture(scope="session")
def c4_cs():
    return coset_space("c4")
