import math
import os
import subprocess
import tempfile

import gch


def test_preset_and_nonlinearity():
    p = gch.make_preset("ch")
    assert p.alpha == 1.0 and p.beta == 0.0 and p.k == 0.0 and p.lam == 0.0
    assert p.h(0.5) == 0.25
    d = gch.make_preset("ch-dissipative", {"lambda": 0.3})
    assert d.lam == 0.3


def test_short_conservative_run():
    p = gch.make_preset("ch")
    data = gch.initial_gaussian(0.25, 1.0, 0.0, 15.0, 4096)
    state = gch.forward_transform(data, gch.GridSpec(512, 15.0))
    snaps = gch.integrate(state, p, 0.5, 2e-3, [0.0])
    assert len(snaps) == 2
    e0, e1 = snaps[0].report.E, snaps[-1].report.E
    assert abs(e1 - e0) / e0 < 1e-4
    field = gch.reconstruct(snaps[-1].state, 0.0)
    assert abs(gch.eval_u_at(field, 0.0)) < 0.5
    assert math.isclose(gch.field_energy(field), e1, rel_tol=1e-2)


def test_residuals_zero_solution():
    p = gch.make_preset("ch")
    state = gch.forward_transform(gch.initial_zero(15.0, 512),
                                  gch.GridSpec(128, 15.0))
    traj = gch.Trajectory()
    traj.params = p
    traj.snaps = gch.integrate(state, p, 0.5, 0.01, [0.0, 0.25])
    for phi in gch.default_battery(0.5, 10.0):
        assert gch.weak_form_residual(traj, phi) == 0.0
        assert gch.balance_law_residual(traj, phi) == 0.0


def test_error_mapping():
    try:
        gch.make_preset("not-a-preset")
    except RuntimeError as e:
        assert "UnknownPreset" in str(e)
    else:
        raise AssertionError("expected an error")


def test_cli_roundtrip():
    cli = os.environ.get("GCH_CLI")
    if not cli:
        return  # binding-only environment
    with tempfile.TemporaryDirectory() as tmp:
        cfg = os.path.join(tmp, "run.cfg")
        with open(cfg, "w") as f:
            f.write(
                "[initial]\nkind = gaussian\namp = 0.2\n"
                "[grid]\nn = 256\nspan = 15\n"
                "[time]\nt_end = 0.2\ndt = 0.005\n"
                "[run]\nsolver = lagrangian\n"
            )
        out = os.path.join(tmp, "out")
        env = dict(os.environ, GCH_OUT=out)
        subprocess.run([cli, "simulate", "-c", cfg], check=True, env=env)
        assert os.path.exists(os.path.join(out, "lagrangian_snapshots.csv"))
        assert os.path.exists(os.path.join(out, "energy.csv"))
        assert os.path.exists(os.path.join(out, "manifest.json"))
        subprocess.run([cli, "verify", "-c", cfg, "--run-dir", out],
                       check=True, env=env)
        assert os.path.exists(os.path.join(out, "verify_report.json"))
