import cmath
import math

import pytest

import p3wkb


def test_voros_closed_form_and_oracle():
    (w1,) = p3wkb.voros_coefficients("d6:inf3:+", 2, 2 - 1j, nmax=1)
    assert abs(w1 - (-1 / (24 * 0.5j))) < 1e-14
    assert abs(p3wkb.voros_oracle("d6:inf3:+", 2, 2 - 1j, 1) - w1) < 1e-6 * abs(w1)


def test_borel_sum():
    g = p3wkb.borel_sum("G", 3, 1.0, "-")
    expect = math.lgamma(3) - 0.5 * math.log(2 * math.pi) - 3 * (math.log(3) - 1) + 0.5 * math.log(3)
    assert abs(g - expect) < 1e-14
    assert p3wkb.borel_sum("G", 1j, 1.0) is None
    c, eta = 1 + 2j, 2.0
    assert abs(p3wkb.laplace_oracle("F", c, eta) - p3wkb.borel_sum("F", c, eta, "-")) < 1e-8


def test_walls():
    assert p3wkb.classify(2, 2 - 1j) == "W2"
    assert p3wkb.jumping_coefficients("W2") == ["F(c_m)"]
    expr, value = p3wkb.connection_multiplier("W2", "t0", 2, 2 - 1j, 3.0)
    assert abs(value - (1 + cmath.exp(-3 * math.pi))) < 1e-15
    with pytest.raises(p3wkb.UnsupportedError):
        p3wkb.connection_multiplier("W3", "inside-loop", 1j, 3 + 0.5j, 1.0)


def test_stokes_diagram():
    d = p3wkb.stokes_diagram(2 + 1j, 3)
    assert len(d["curves"]) == 16
    assert p3wkb.stokes_diagram(1j, d7=True)["degenerations"][0]["kind"] == "loop"


def test_bad_input():
    with pytest.raises(ValueError):
        p3wkb.parse_complex("nope")
    with pytest.raises(ValueError):
        p3wkb.voros_coefficients("d6:inf3:+", 1, 1)


def test_verify_suite():
    results = p3wkb.run_suite("borel")
    assert results and all(r["ok"] for r in results)
    assert "asymptotics" in p3wkb.suite_names()
