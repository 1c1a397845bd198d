import json
import math
import os
import subprocess

import pytest

import moserlab as ml


@pytest.fixture(scope="module")
def table():
    return ml.scan_zeros(10.0, 1500.0)


def test_z_and_theta():
    z, err = ml.z(100.0)
    assert abs(z - 2.692697056664463) < 1e-9
    assert err >= 0.0
    value, first, second = ml.z_derivatives(100.0)
    assert value == pytest.approx(z, abs=1e-12)
    assert abs(ml.zeta_half(100.0)) == pytest.approx(abs(z), rel=1e-12)
    th1, th2 = ml.theta_derivatives(1e4)
    assert th1 == pytest.approx(0.5 * math.log(1e4 / (2 * math.pi)), rel=1e-6)
    with pytest.raises(ml.DomainError):
        ml.z(5.0)


def test_scan_and_table(table):
    assert len(table) == table.count_up_to(1500.0)
    assert table[0] == pytest.approx(14.134725141734693, abs=1e-9)
    assert table.covers_origin()
    assert not table.ingested
    assert ml.completeness_check(table, 1000.0)["flagged"] is False
    assert len(ml.scan_zeros(10.0, 50.0)) == 10
    with pytest.raises(ml.ParseError):
        ml.ingest_zeros("21.0\n14.1\n")
    with pytest.raises(ml.Error):
        ml.ingest_zeros("21.0\n14.1\n")


def test_sums(table):
    assert ml.partial_sum("inv_sq_shift", 0.0, [1.0]) == 2.0
    assert ml.partial_sum("riemann", 0.0, [1.0]) == pytest.approx(1.6)
    s = ml.spectral_sum("riemann", 0.0, table, 1500.0)
    assert s.total == s.partial + s.tail
    assert abs(s.total - ml.riemann_constant()) < 1e-3
    with pytest.raises(ml.IncompleteTable):
        ml.spectral_sum("riemann", 0.0, table, 5000.0)


def test_reports(table):
    pts = ml.scan_stationary(table, 10.0, 700.0)
    assert len(pts) == table.count_up_to(700.0) - 1
    rep = ml.verify_theorem1(ml.filter_tilde(pts, 1.0), 1.0)
    assert rep.passed
    assert rep.statistics["min_margin"] > 1.0
    sur = ml.verify_formula1_surrogate([1.0, 3.0, 7.0], 1.0, 7.0, 50)
    assert sur.passed
    f1 = ml.verify_formula1(table, 100.0, 450.0, 100)
    assert f1.passed and f1.samples == 100


def test_cosmo(table):
    p = ml.scan_stationary(table, 10.0, 22.0)[0]
    unit = ml.CosmoParams()
    assert ml.density(p.t0) == pytest.approx(3.0 / p.z_value ** 2, rel=1e-12)
    iv = ml.pressure_interval(p, unit, table)
    assert p.gamma_lo < iv.lo < p.t0 < iv.hi < p.gamma_hi
    prof = ml.profile(15.0, 20.0, 0.5, unit, table)
    assert all(s.rho > 0 for s in prof)
    with pytest.raises(ml.PoleError):
        ml.density(14.134725141734693)


def test_cli_subprocess(tmp_path):
    exe = os.environ.get("MOSERLAB_CLI")
    if not exe:
        pytest.skip("MOSERLAB_CLI not set")
    out = tmp_path / "t1.json"
    r = subprocess.run([exe, "verify", "theorem1", "--t-hi", "200", "--out", str(out)],
                       capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    doc = json.loads(out.read_text())
    assert doc["name"] == "theorem1"
    assert doc["pass"] is True
    assert list(doc)[:3] == ["name", "samples", "pass"]
    bad = subprocess.run([exe, "zeros", "scan", "--t-lo", "50", "--t-hi", "10"], capture_output=True)
    assert bad.returncode == 2


def test_run_in_process():
    assert ml.run(["zeros", "scan", "--t-lo", "50", "--t-hi", "10"]) == 2
