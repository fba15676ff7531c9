import json

import pytest

from fockspace import verify
from fockspace.qpoly import TPoly


def test_report_shape():
    rep = verify.verify_carlem(4)
    assert set(rep) >= {"target", "passed", "checked", "failures"}
    assert rep["target"] == "carlem" and rep["passed"] and rep["checked"] > 0
    json.dumps(rep)


@pytest.mark.parametrize("fn,args", [
    (verify.verify_kostka, (5,)),
    (verify.verify_pieri, (5, 3)),
    (verify.verify_dualpieri, (5, 3)),
    (verify.verify_bstrip, (7,)),
    (verify.verify_carbeta, (8, 3)),
    (verify.verify_carlem, (6,)),
    (verify.verify_addrun, (30, 1)),
    (verify.verify_samecoeff, (30, 1)),
    (verify.verify_sasfk, (30, 1)),
])
def test_small_runs_pass(fn, args):
    rep = fn(*args)
    assert rep["passed"], rep["failures"]


def test_seeded_runs_are_reproducible():
    assert verify.verify_addrun(10, 7) == verify.verify_addrun(10, 7)


def test_random_instances_are_not_trivial():
    import random

    rng = random.Random(0)
    sizes = set()
    for _ in range(30):
        al, ctx = verify.random_standard(5, 3, rng)
        assert len(al) == ctx.l
        sizes.add(sum(al))
    assert len(sizes) > 3


def test_broken_hsb_is_detected(monkeypatch):
    monkeypatch.setattr(verify, "hsb", lambda la, mu: TPoly({0: 2}))
    assert not verify.verify_bstrip(4)["passed"]
    assert not verify.verify_addrun(20, 0)["passed"]


def test_broken_kostka_is_detected(monkeypatch):
    monkeypatch.setattr(verify, "kostka_by_charge", lambda la, mu: TPoly({0: 5}))
    rep = verify.verify_kostka(3)
    assert not rep["passed"] and rep["failures"]
