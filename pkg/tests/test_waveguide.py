import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from qlorentz.errors import DomainError
from qlorentz.kinematics import ALLOWED, LIGHTLIKE, NATURAL, SI, SUPPRESSED, TIMELIKE, Event, tunnel_probability
from qlorentz.waveguide import (
    CSV_COLUMNS,
    WaveguideParams,
    dispersion,
    effective_quantities,
    guided_tunnel_probability,
    read_csv,
    rows_to_csv,
    scan,
    scan_positions,
)

WR90 = 22.86e-3


def _xband_reference():
    mpmath.mp.dps = 30
    a = mpmath.mpf("22.86e-3")
    c = mpmath.mpf(299792458)
    hbar = mpmath.mpf("1.054571817e-34")
    omega_c = mpmath.pi * c / a
    return float(omega_c), float(a / mpmath.pi), float(hbar * omega_c / c**2)


class TestEffective:
    def test_natural_collapse(self):
        q = effective_quantities(WaveguideParams(1.0), NATURAL)
        assert (q.m_eff, q.lambda_c) == (1.0, 1.0)

    def test_xband(self):
        omega_c, lam, m_eff = _xband_reference()
        w = WaveguideParams.from_width(WR90, SI)
        q = effective_quantities(w, SI)
        assert w.omega_c == pytest.approx(omega_c, rel=1e-14)
        assert q.lambda_c == pytest.approx(lam, rel=1e-14)
        assert q.m_eff == pytest.approx(m_eff, rel=1e-14)
        assert q.lambda_c == pytest.approx(7.2766e-3, rel=1e-4)

    @given(st.floats(1e6, 1e14))
    def test_wavelength_times_cutoff_is_c(self, omega_c):
        q = effective_quantities(WaveguideParams(omega_c), SI)
        assert q.lambda_c * omega_c == pytest.approx(SI.c, rel=4e-16)

    def test_cutoff_from_frequency(self):
        assert WaveguideParams.from_cutoff_frequency(1e9).omega_c == 2 * math.pi * 1e9

    def test_invalid(self):
        with pytest.raises(DomainError):
            WaveguideParams(0.0)
        with pytest.raises(DomainError):
            WaveguideParams.from_width(-1.0)


class TestDispersion:
    w = WaveguideParams(2.0)

    def test_at_cutoff(self):
        s = dispersion(self.w, k_x=0.0)
        assert s.omega == 2.0 and s.v_g == 0.0

    def test_root_two(self):
        s = dispersion(self.w, omega=math.sqrt(2) * 2.0)
        assert s.v_g == pytest.approx(1 / math.sqrt(2), rel=1e-15)
        assert s.omega**2 == pytest.approx(s.k_x**2 + 4.0, rel=1e-12)

    def test_evanescent(self):
        s = dispersion(self.w, omega=0.8 * 2.0)
        assert s.k_x is None and s.v_g is None
        assert s.kappa == pytest.approx(0.6 * 2.0, rel=1e-15)

    @given(st.floats(1.0001, 1e6))
    def test_subluminal(self, ratio):
        s = dispersion(self.w, omega=ratio * 2.0)
        assert 0 < s.v_g < 1.0
        faster = dispersion(self.w, omega=ratio * 2.0 * 1.5)
        assert faster.v_g >= s.v_g

    def test_needs_exactly_one(self):
        with pytest.raises(ValueError):
            dispersion(self.w)


class TestGuidedProbability:
    def test_half_wavelength(self):
        w = WaveguideParams.from_width(WR90, SI)
        lam = effective_quantities(w, SI).lambda_c
        r = guided_tunnel_probability(Event(0.0, lam / 2), w, SI)
        assert abs(r.probability - math.exp(-1)) < 1e-12
        assert r.classification == ALLOWED

    def test_light_cone(self):
        r = guided_tunnel_probability(Event(1.0, 1.0), WaveguideParams(1.0))
        assert r.probability == 1.0

    @given(st.floats(-1e-10, 1e-10), st.floats(-0.05, 0.05), st.floats(1e9, 1e12))
    def test_matches_particle_path(self, t, x, omega_c):
        w = WaveguideParams(omega_c)
        m_eff = SI.hbar * omega_c / SI.c**2
        assert guided_tunnel_probability(Event(t, x), w, SI) == tunnel_probability(Event(t, x), m_eff, SI)


class TestScan:
    def test_eleven_rows(self):
        rows = scan(WaveguideParams(1.0), NATURAL, 0.0, 0.0, 1.0, 0.1)
        assert len(rows) == 11
        assert rows[0].probability == 1.0 and rows[0].classification == LIGHTLIKE
        for row in rows[1:]:
            assert row.probability == pytest.approx(math.exp(-2 * row.x), rel=1e-14)
        assert rows[-1].probability == pytest.approx(math.exp(-2), rel=1e-14)

    def test_boundary_row(self):
        rows = scan(WaveguideParams(1.0), NATURAL, 0.0, 0.0, 1.0, 0.1)
        assert rows[5].x == 0.5
        assert rows[5].classification == ALLOWED
        assert rows[6].classification == SUPPRESSED

    def test_all_timelike(self):
        rows = scan(WaveguideParams(1.0), NATURAL, 10.0, 0.0, 1.0, 0.1)
        assert {r.classification for r in rows} == {TIMELIKE}
        assert all(r.probability is None for r in rows)

    def test_empty_and_bad_ranges(self):
        assert scan_positions(1.0, 0.0, 0.1) == []
        with pytest.raises(DomainError):
            scan_positions(0.0, 1.0, 0.0)

    def test_csv_round_trip(self):
        w = WaveguideParams.from_width(WR90, SI)
        rows = scan(w, SI, 1e-12, 0.0, 0.00728, 0.000728)
        text = rows_to_csv(rows)
        assert text.splitlines()[0] == ",".join(CSV_COLUMNS)
        assert read_csv(text) == rows
        blank = [r for r in rows if r.classification == TIMELIKE]
        assert blank and all(r.probability is None for r in read_csv(text) if r.classification == TIMELIKE)
