import math

import minorclass as mc


def test_counting_sequences():
    assert mc.counts("forests", 5) == [1, 1, 2, 7, 38, 291]
    assert mc.counts("max-degree-2", 5, connected=True) == [0, 1, 1, 4, 15, 72]
    assert mc.counts("bowtie-free", 4) == [1, 1, 2, 8, 64]


def test_distribution_path_forests():
    law = mc.distribution("path-forests", 2, "N")
    assert law == [(1, "1/2", 0.5), (2, "1/2", 0.5)]
    total = sum(frac for _, _, frac in mc.distribution("forests", 5, "S"))
    assert abs(total - 1.0) < 1e-12


def test_membership():
    assert mc.membership("forests", 3, [(1, 2), (2, 3)])
    assert not mc.membership("forests", 3, [(1, 2), (2, 3), (1, 3)])
    assert mc.membership("max-degree-2", 4, [(1, 2), (2, 3), (3, 4), (4, 1)])


def test_sampler_deterministic():
    a = mc.sample_g6("forests", 0.2, seed=42, samples=25)
    b = mc.sample_g6("forests", 0.2, seed=42, samples=25)
    assert a == b
    assert len(a) == 25


def test_asymptotic_helpers():
    # forests: a_n ~ sqrt(e) c_n, both from the same printed formula here
    diff = mc.closed_form_log("forests", 100) - mc.closed_form_log(
        "forests", 100, connected=True
    )
    assert abs(diff - 0.5) < 1e-9

    positive, value, _ = mc.connectivity("forests")
    assert positive and abs(value - math.exp(-0.5)) < 1e-9

    mean, variance = mc.component_prediction("bounded:2", 10000)
    assert abs(mean - 5000) < 100
    assert variance > 0


def test_limit_helpers():
    assert mc.pd_rho(0.5) == 1.0
    assert mc.pd_rho(2.0, step=1e-3) < 0.1
    assert abs(mc.gumbel_cdf(0.0) - math.exp(-1 / math.sqrt(2))) < 1e-12
