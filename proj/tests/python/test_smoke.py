"""Smoke tests for the python bindings."""

import math
import os
import sys

import chinos


def approx(a, b, tol=1e-12):
    assert abs(a - b) <= tol, f"{a} != {b} (tol {tol})"


def test_classical():
    assert chinos.classical_round(0, 0, 1, 0) == "B"
    assert chinos.classical_round(1, 0, 1, 0) == "A"
    try:
        chinos.classical_round(0, 1, 1, 1)
    except chinos.ChinosError:
        pass
    else:
        raise AssertionError("restriction violation not raised")


def test_boson():
    p = chinos.outcome_probs("boson", 2, 2)
    approx(p[0], 1 / 7)
    approx(p[2], 2 / 7)
    avg = chinos.averaged_probs("boson")
    approx(avg[1][0], 41 / 168)
    approx(avg[3][2], 7 / 12)
    pa, pb = chinos.winning_probability("boson", None, [1, 2, 3, 4], [0, 2, 2, 2])
    approx(pa, 53 / 112)
    pa, _ = chinos.winning_probability("boson", None, [1, 4], [0, 2])
    approx(pa, 13 / 24)


def test_hardcore_and_qubit():
    pa, _ = chinos.winning_probability("hardcore", math.pi / 4, [1, 2, 3], [0, 0, 0])
    approx(pa, 3 / 5)
    pa, _ = chinos.winning_probability(
        "hardcore", math.pi / 4, [1, 2, 3], [0, 0, 0], [0.0, 0.5, 0.5]
    )
    approx(pa, 17 / 30)
    t1, t2 = chinos.crossing_angles("hardcore")
    assert abs(t1 - 0.9155) < 1e-4
    assert abs(t2 - math.pi / 3) < 1e-10
    t1, t2 = chinos.crossing_angles("qubit")
    assert abs(t1 - math.pi / 2) < 1e-10
    assert abs(t2 - 2 * math.pi / 3) < 1e-10


def test_equilibrium():
    rep = chinos.equilibrium("hardcore", math.pi / 4)
    assert rep["stable"]
    assert rep["winner"] == "A"
    approx(rep["P_A"], 17 / 30)
    rep = chinos.equilibrium("boson")
    assert rep["winner"] == "symmetric"


def test_metric():
    g = chinos.metric_matrix(0.0)
    approx(abs(g[0][0] - 1), 0)
    approx(abs(g[0][10] - 1), 0)  # 00 vs 22
    approx(abs(g[7][1] + 1), 0)  # 13 vs 01
    g = chinos.metric_matrix(math.pi / 3)
    approx(g[0][6].real, math.cos(math.pi / 6))
    approx(g[7][0].imag, -math.sin(math.pi / 6))
    labels = chinos.metric_labels(block_order=True)
    assert labels[0] == "00" and labels[1] == "22"

    pa, pb = chinos.two_qubit_probabilities(0.0)
    approx(pa, 1 / 3)
    approx(pb, 2 / 3)
    pa, pb = chinos.two_qubit_probabilities(math.pi)
    approx(pa, 0.5)
    pa, pb = chinos.two_qubit_probabilities(0.0, "alice_first")
    approx(pa, 0.5)

    ratio, rhs, purity = chinos.purity_relation(math.pi / 3)
    approx(ratio, 1.75)
    approx(rhs, 1.75)

    assert len(chinos.orthogonal_guesses(0.0, "00", 1e-9)) == 12


def test_shots():
    est, stderr, expected = chinos.estimate_overlap("22", "30", 0.0, 8192, 7)
    approx(expected, 1.0)
    approx(est, 1.0)
    est1 = chinos.estimate_overlap("00", "12", math.pi / 3, 4096, 5)
    est2 = chinos.estimate_overlap("00", "12", math.pi / 3, 4096, 5)
    assert est1 == est2

    p = chinos.calibrated_depolarizing_p()
    assert 0 < p < 0.05

    data_dir = os.environ.get("CHINOS_DATA_DIR")
    if data_dir:
        path = os.path.join(data_dir, "ibmq_manila_g.csv")
        rep = chinos.compare_experiment(path)
        assert 0.10 <= rep["avg_err_on_zeros"] <= 0.24
        approx(rep["max_err"], 0.28)
        assert len(chinos.admissible_pairs(path, 0.25)) == 184
        assert len(chinos.admissible_pairs(path, 1.0)) == 240


def test_blocks():
    blocks = chinos.block_decomposition(0.0)
    assert blocks["sets"][0] == ["00", "22", "12", "30"]
    blocks = chinos.block_decomposition(math.pi / 4)
    assert len(blocks["pairs"]) == 8
    assert blocks["pairs"][4] == ["02", "20"]


def test_monte_carlo():
    pa, pb, stderr = chinos.monte_carlo(
        "boson", None, [1, 2, 3, 4], [0, 2, 2, 2], [1, 2, 3, 4], [0, 0, 0, 0], 50000, 3
    )
    assert abs(pa - 53 / 112) <= 4 * stderr


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} smoke tests passed (chinos {chinos.__version__})")


if __name__ == "__main__":
    sys.exit(main())
