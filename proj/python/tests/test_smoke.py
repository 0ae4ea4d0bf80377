import cmath
import json
import math

import pytest

import mslab

ZSQ = mslab.spec(zeros=[0j, 0j])  # theta(z) = z^2

REMARK3 = mslab.spec(
    domain="half_plane",
    tail={"name": "remark3", "params": {}, "truncation_N": 200},
)


def test_eval_inner_polynomial():
    z = 0.3 + 0.2j
    assert mslab.eval_inner(ZSQ, z) == pytest.approx(z * z)


def test_kernel_matches_closed_form():
    lam, z = 0.4 + 0.1j, 0.2 - 0.3j
    want = (1 - (lam.conjugate() ** 2) * z * z) / (1 - lam.conjugate() * z)
    assert mslab.kernel_eval(ZSQ, lam, z) == pytest.approx(want, rel=1e-12)


def test_kernel_norm_interior():
    lam = 0.5 + 0.2j
    # |k_lam|^2 = (1 - |lam|^4) / (1 - |lam|^2) = 1 + |lam|^2
    assert mslab.kernel_norm(ZSQ, lam) == pytest.approx(
        math.sqrt(1 + abs(lam) ** 2), rel=1e-12
    )


def test_ac_orders_split_at_infinity():
    a0 = mslab.ac_test(REMARK3, point=None, order=0)
    assert a0["verdict"] == "converged"
    assert a0["partial_sum"] == pytest.approx(2.471130548173, rel=1e-9)
    assert a0["tail_bound"] == pytest.approx(0.1414213562373, rel=1e-9)
    a1 = mslab.ac_test(REMARK3, point=None, order=1)
    assert a1["verdict"] == "diverged"
    assert "tail_bound" not in a1


def test_clark_atoms_of_z_squared():
    mu = mslab.clark_atoms(ZSQ, alpha=1.0)
    assert mu["domain"] == "disc"
    assert mu["alpha"] == pytest.approx(1.0)
    positions = sorted(at[0].real for at in mu["atoms"])
    assert positions == pytest.approx([-1.0, 1.0])
    for _, weight in mu["atoms"]:
        assert weight == pytest.approx(0.5, rel=1e-12)


def test_build_system_geometry():
    sys = mslab.build_system(ZSQ, [0.3, -0.2j])
    gram = sys["gram"]
    assert gram[0][0] == pytest.approx(1.0)
    assert gram[1][1] == pytest.approx(1.0)
    assert gram[0][1] == pytest.approx(gram[1][0].conjugate())
    assert abs(gram[0][1]) < 1.0
    assert 0.0 < sys["riesz"]["lower"] <= sys["riesz"]["upper"]


def test_run_scenario_remark3():
    r = mslab.run_scenario({"scenario": "remark3"})
    assert r["scenario"] == "remark3"
    claims = r["report"]["claims"]
    assert set(claims) == {"ac_order0", "ac_order1", "tsq_derivative_growth"}
    assert all(c["pass"] for c in claims.values())
    assert len(r["traces"]["acsums"]) == 200
    assert r["traces"]["acsums"][0] == pytest.approx(1.0)


def test_run_and_emit_writes_files(tmp_path):
    paths = mslab.run_and_emit({"scenario": "remark3", "out_dir": str(tmp_path)})
    assert len(paths) == 3
    body = json.loads((tmp_path / "remark3.json").read_text())
    assert body["scenario"] == "remark3"
    assert sorted(body["trace_files"]) == [
        "remark3_acsums.csv",
        "remark3_tsq_derivative.csv",
    ]


def test_config_errors_become_value_errors():
    with pytest.raises(ValueError, match="unknown scenario"):
        mslab.run_scenario({"scenario": "section9"})


def test_numeric_errors_become_runtime_errors():
    blowup = mslab.spec(
        tail={
            "name": "radial_geometric",
            "params": {"ratio": 2.0, "anchor_angle": 0.0},
            "truncation_N": 30,
        }
    )
    with pytest.raises(RuntimeError, match="not regular"):
        mslab.kernel_norm(blowup, 1.0)
