import pytest

import silverbig as sb


@pytest.fixture(scope="session")
def sts7():
    return sb.make_sts(7, "skolem")


@pytest.fixture(scope="session")
def sts9():
    return sb.make_sts(9, "bose")


@pytest.fixture(scope="session")
def sts13c():
    return sb.make_sts(13, "cyclic13")


@pytest.fixture(scope="session")
def sts13nc():
    return sb.make_sts(13, "noncyclic13")


@pytest.fixture(scope="session")
def kts15():
    return sb.make_sts(15, "kirkman15")


@pytest.fixture(scope="session")
def sts19():
    return sb.make_sts(19, "skolem")


@pytest.fixture(scope="session")
def ag3():
    return sb.make_affine_plane(3)


@pytest.fixture(scope="session")
def ag4():
    return sb.make_affine_plane(4)


@pytest.fixture(scope="session")
def kts27_product(ag3):
    return sb.product_design(ag3, sb.make_kts(9))


@pytest.fixture(scope="session")
def rbibd64_product(ag4):
    return sb.product_design(ag4, ag4)


@pytest.fixture(scope="session")
def menagerie(sts7, sts9, sts13c, sts13nc, kts15, sts19, kts27_product, rbibd64_product):
    """All constructed designs with b <= 400, for the sweep tests."""
    designs = [
        sts7,
        sts9,
        sts13c,
        sts13nc,
        kts15,
        sts19,
        sb.make_sts(21, "bose"),
        sb.make_sts(25, "skolem"),
        sb.make_kts(45),
        kts27_product.design,
        rbibd64_product.design,
    ]
    designs += [sb.make_affine_plane(n) for n in (2, 3, 4, 5, 7, 8, 9)]
    designs += [sb.make_projective_plane(n) for n in (2, 3, 4, 5, 7, 8)]
    assert all(d.b <= 400 for d in designs)
    return designs
