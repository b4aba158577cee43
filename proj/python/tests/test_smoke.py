import math
import pathlib

import pytest

import sdym

SEEDS = pathlib.Path(__file__).resolve().parents[2] / "seeds"


def test_catalogue_seed_verifies():
    seed = sdym.Seed.load(str(SEEDS / "three_factor.json"))
    report = sdym.verify(seed, samples=30)
    assert report.passed
    assert [e.identity for e in report.entries] == sdym.identity_catalogue()
    assert report["GFL_ybar"].max_residual < 1e-12


def test_corrupted_seed_fails():
    report = sdym.verify(sdym.Seed.load(str(SEEDS / "corrupted.json")), samples=30)
    assert not report.passed


def test_malformed_seed_raises():
    with pytest.raises(sdym.Error, match="MalformedSeed"):
        sdym.Seed.from_json('{"kind": "half_gauge"}')


def test_transform_is_hermitian():
    seed = sdym.Seed.load(str(SEEDS / "upper_lower.json"))
    out = sdym.transform(seed, (0.3 - 0.2j, 0.1 + 0.4j))
    x_plus, middle, x_minus = out["lr"]
    assert abs(x_minus - x_plus.conjugate()) < 1e-8
    assert abs(middle.imag) < 1e-8
    assert out["commutativity_residual"] < 1e-8


def test_negative_argument_is_reported():
    seed = sdym.Seed.load(str(SEEDS / "small_chi.json"))
    with pytest.raises(sdym.Error, match="NegativeArgument"):
        sdym.transform(seed, (0.3, 0.1))


def test_one_instanton():
    seed = sdym.Seed.one_instanton(1.0)
    assert not seed.full_gauge
    q = sdym.backlund_charge_density(seed, (1.0, 0.0))
    assert q.real == pytest.approx(-6 * 0.25 / 1.5**4, rel=1e-12)
    radii, q_in, q_b = sdym.radial_profile(seed, 3.0, 10)
    assert len(radii) == 10 and all(v == 0.0 for v in q_in)
    total = sdym.total_charge(seed)
    assert total["method"] == "radial"
    assert total["value"] == pytest.approx(-math.pi**2, rel=1e-6)


def test_seed_json_round_trip():
    seed = sdym.Seed.load(str(SEEDS / "three_factor.json"))
    again = sdym.Seed.from_json(seed.to_json())
    assert again.to_json() == seed.to_json()
