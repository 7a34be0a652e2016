"""Shared fixtures: published zeros for lambda = 1.3, eta = 2.1 and for F_0."""

import pytest

from coulomb_zeros.models import Kind, Params

# (refined zero, printed relative error of the 6-term approximation), n = 1..10
PUBLISHED_ZEROS = {
    Kind.F: [
        (9.276226087098264, 6.8e-4),
        (13.32061436693835, 5.3e-5),
        (17.04925305758087, 9.0e-6),
        (20.63316305105047, 2.3e-6),
        (24.13196399208639, 7.5e-7),
        (27.57414717920683, 2.9e-7),
        (30.97572598757761, 1.3e-7),
        (34.34666006955555, 6.1e-8),
        (37.69359261174668, 3.2e-8),
        (41.02118854245900, 1.7e-8),
    ],
    Kind.G: [
        (6.925107084382577, 4.9e-3),
        (11.35971565567721, 1.6e-4),
        (15.20913702648054, 2.0e-5),
        (18.85445602183751, 4.3e-6),
        (22.39100849194709, 1.2e-6),
        (25.85894221100473, 4.6e-7),
        (29.27928968958546, 1.9e-7),
        (32.66455053595783, 8.7e-8),
        (36.02279903910762, 4.3e-8),
        (39.35957112638164, 2.3e-8),
    ],
    Kind.dF: [
        (6.740012285516214, 2.0e-2),
        (11.33586159146655, 4.5e-4),
        (15.19947063325694, 5.3e-5),
        (18.84912765706333, 1.1e-5),
        (22.38760195810186, 3.2e-6),
        (25.85656409550572, 1.1e-6),
        (29.27752955366132, 4.6e-7),
        (32.66319220425298, 2.1e-7),
        (36.02171734983164, 1.0e-7),
        (39.35868838281058, 5.5e-8),
    ],
    Kind.dG: [
        (9.226939712774167, 2.0e-3),
        (13.30627800305222, 1.4e-4),
        (17.04225058479286, 2.3e-5),
        (20.62896049608348, 5.7e-6),
        (24.12914248690917, 1.8e-6),
        (27.57211363372210, 7.0e-7),
        (30.97418664616960, 3.1e-7),
        (34.34545207910902, 1.4e-7),
        (37.69261810059473, 7.5e-8),
        (41.02038500317911, 4.1e-8),
    ],
}

# refined zeros of F_0(eta, rho), (eta, n) -> printed value
F0_ZEROS = {
    (1.5, 2): "10.97335",
    (1.5, 3): "14.566335",
    (2.0, 2): "12.4052",
    (2.0, 3): "16.11044",
    (2.5, 2): "13.7879",
    (2.5, 3): "17.5953",
    (3.0, 2): "15.1335",
    (3.0, 3): "19.0352",
}


@pytest.fixture
def params() -> Params:
    return Params(lam=1.3, eta=2.1)


@pytest.fixture
def bessel_params() -> Params:
    return Params(lam=0.0, eta=0.0)


@pytest.fixture
def published_zeros() -> dict[Kind, list[tuple[float, float]]]:
    return PUBLISHED_ZEROS


@pytest.fixture
def f0_zeros() -> dict[tuple[float, int], str]:
    return F0_ZEROS
