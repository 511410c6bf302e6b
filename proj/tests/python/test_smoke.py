"""Smoke tests for the photonlab python module."""

import math

import numpy as np
import pytest

import photonlab as pl

PI = math.pi


@pytest.fixture
def grid():
    return pl.GridSpec(128, 20 * PI)


def test_grid_geometry(grid):
    assert grid.n_modes == 128
    assert grid.dx * grid.dp * grid.n_modes == pytest.approx(2 * PI, rel=1e-15)
    assert grid.omega(10) == pytest.approx(1.0)
    assert not grid.retained(0)
    with pytest.raises(ValueError):
        pl.GridSpec(127, 1.0)


def test_polynomials_and_hermite_map():
    q2 = pl.nphoton_polynomial(2)
    assert q2.factored_text() == "2|p|(2|p|a^2 - d)"
    assert [(t.coeff, t.pow_a, t.pow_d, t.pow_pbar) for t in q2.terms] == [
        (4, 2, 0, 2),
        (-2, 0, 1, 1),
    ]
    q3 = pl.apply_creation(q2)
    assert q3 == pl.nphoton_polynomial(3)
    q10 = pl.nphoton_polynomial(10)
    assert q10.coefficient(0) == 1024  # leading Hermite coefficient
    bare = pl.drop_contact_terms(q10)
    assert bare.contact_free
    assert pl.evaluate_prefactor(bare, 0.5 + 0j, 1.0).real == pytest.approx(
        2**10 * 0.5**10
    )
    with pytest.raises(ValueError):
        pl.evaluate_prefactor(q2, 1.0 + 0j, 1.0)  # contact terms present


def test_transform_round_trip(grid):
    rng = np.random.default_rng(12)
    half = rng.normal(size=64) + 1j * rng.normal(size=64)
    half[0] = 0.0  # excluded zero mode
    spec = pl.SpectralField.from_half(grid, list(half))
    field = pl.inverse_transform(spec)
    values = field.values
    assert values.shape == (128,)
    back = pl.forward_transform(field)
    np.testing.assert_allclose(back.half, spec.half, rtol=0, atol=1e-12)
    assert pl.parseval_energy(field) == pytest.approx(
        pl.spectral_energy(spec), rel=1e-12
    )


def test_most_likely_density(grid):
    content = pl.PhotonContent.single(10, 1)
    report = pl.most_likely_density(grid, content)
    assert report.density.value(10) == pytest.approx(5.0)
    assert report.density.value(-10) == report.density.value(10)

    ascent = pl.ascent_maximize(grid, content, pl.flat_density(grid, 1.0))
    assert ascent.converged
    assert ascent.density.value(10) == pytest.approx(5.0, rel=1e-6)

    r = pl.most_likely_autocorrelation(grid, content)
    assert r.value(0) == pytest.approx(1.0, rel=1e-9)

    with pytest.raises(ValueError):
        pl.most_likely_density(grid, pl.PhotonContent.pair(10, -10))
    cp = pl.counter_propagating_extremum(grid, 10)
    assert cp.certified
    assert all(g <= 0 for g in cp.exponent_gradient)


def test_sampling(grid):
    spec = pl.EnsembleSpec(grid, pl.PhotonContent.single(10, 1), 4000, 7)
    stream = pl.sample_photons(spec)
    stats = pl.estimate_density(stream)
    se = stats.density_stderr[10]
    assert stats.mean_density.value(10) == pytest.approx(10.0, abs=5 * se)
    assert stats.density_stderr.shape == (64,)
    with pytest.raises(ValueError):
        pl.SampleStream(
            pl.EnsembleSpec(grid, pl.PhotonContent.pair(10, -10), 100, 1)
        )


def test_acceptance_hook():
    ids = pl.criterion_ids()
    assert len(ids) == 10
    results = pl.run_acceptance(only="polynomial_regression")
    assert len(results) == 1 and results[0].pass_
