from fractions import Fraction

import pytest

import bpb


def test_generate_and_correct():
    inst = bpb.generate(3, 5, 4, eps="3/10")
    out = bpb.correct(inst)
    assert out["all_pass"] is True
    assert out["mode"] == "rational"
    assert bpb.fraction(out["correction"]["eta"]) == (Fraction(3, 10) / 58) ** 2
    assert {c["name"] for c in out["report"]["checks"]} >= {"positive", "unit_norm", "norm_attainment"}


def test_correct_matches_hand_example():
    inst = {"S": {"matrix": [["1/2", "1/2"]]}, "f0": ["1", "1"]}
    out = bpb.correct(inst, eps=Fraction(1, 2))
    assert out["correction"]["T"]["matrix"] == [["1/2", "1/2"]]
    assert out["correction"]["u0"] == ["1/1", "1/1"]
    assert out["correction"]["certificate"]["dist_point"] == "0/1"


def test_float_mode():
    inst = bpb.generate(4, 3, 3, eps="1/2", mode="float")
    out = bpb.correct(inst, mode="float")
    assert out["mode"] == "float"
    assert out["all_pass"] is True


def test_errors_carry_codes():
    with pytest.raises(bpb.BpbError) as info:
        bpb.correct({"S": {"matrix": [["1", "1"]]}, "f0": ["1", "1"]}, eps="1/2")
    assert bpb.error_code(info.value) == "NotUnitNorm"
    with pytest.raises(ValueError):
        bpb.norm({"matrix": []})


def test_lemma_and_norm():
    out = bpb.lemma({"f1": ["101/200", "1/200"], "f2": ["1/200", "97/200"], "eps": "3/20"})
    assert out["witness"]["normalizer"] == "99/100"
    assert all(e["pass"] for e in out["certificate"])
    n = bpb.norm({"matrix": [["1", "-1"]]}, exact=True)
    assert n["opnorm_exact"] == "2/1"


def test_sweep_is_reproducible():
    cfg = {"n": [3], "m": [2, 4], "eps": ["1/10"], "trials": 4, "seed": 9}
    csv1, summary = bpb.sweep(cfg)
    csv2, _ = bpb.sweep(cfg)
    assert csv1 == csv2
    assert summary["passed"] == 8
    assert csv1.splitlines()[0].startswith("seed,n,m,eps,")


def test_counterexample():
    assert bpb.tnorm([1.0]) == 1.5
    assert bpb.identity_norm(2) == pytest.approx(1 + 5 ** 0.5 / 4, abs=1e-15)
    assert bpb.attainment_gap(1) == pytest.approx(3 ** -0.5 - 0.5, abs=1e-12)
    out = bpb.counterexample(n_max=4, k_max=4, convexity_trials=20, seed=2)
    assert out["convexity"]["passed"] == 20
