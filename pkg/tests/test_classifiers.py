"""Coefficient-level classifiers and their hypothesis gating."""

import pytest

from skewpbw import classifiers as cl
from skewpbw import finite_rings as fr
from skewpbw.errors import PreconditionUnmet
from skewpbw.fixtures import build_extension, fixture

E12, E11, E22, I, A = 2, 4, 1, 5, 7


def nonni_extension(m2):
    desc = {"ring": {"family": "table", "order": m2.order, "add": m2.add_table.tolist(),
                     "mul": m2.mul_table.tolist(), "zero": m2.zero, "one": m2.one},
            "sigmas": [{"name": "identity"}]}
    return build_extension(desc, samples=50)


def test_profiles(ut, s2x):
    p = cl.hypothesis_profile(ut)
    assert p.weak_compatible and p.NI and not p.abelian
    q = cl.hypothesis_profile(s2x)
    assert q.weak_compatible and q.NI and q.abelian
    r = cl.hypothesis_profile(fixture("zmod3"))
    assert r.reduced and r.sigma_rigid


def test_nilpotents(ut, z4):
    assert cl.is_nilpotent_in_A(ut.parse("[[0,1],[0,0]] + [[0,1],[0,0]]*x1")).is_true
    assert cl.is_nilpotent_in_A(ut.one()).value == cl.FALSE
    assert cl.is_nilpotent_in_A(z4.x(1)).value == cl.FALSE


def test_product_in_nil(ut, z4):
    f = ut.parse("[[0,1],[0,0]] + [[0,1],[0,0]]*x1")
    assert cl.product_in_nil(f, f).is_true
    assert cl.product_in_nil(z4.one(), z4.one()).value == cl.FALSE
    assert cl.product_in_nil(z4.parse("2"), z4.parse("2 + 2*x1")).is_true


@pytest.mark.parametrize("fix, text, value", [
    ("zmod4", "1 + 2*x1", cl.TRUE),
    ("ut2", "[[1,0],[0,1]] + [[0,1],[0,0]]*x1", cl.TRUE),
    ("zmod4", "x1", cl.FALSE),
    ("zmod4", "3 + 2*x1^3", cl.TRUE),
    ("zmod4", "2 + x1", cl.FALSE),
])
def test_units(fix, text, value):
    assert cl.is_unit_in_A(fixture(fix).parse(text)).value == value


def test_constant_product_consequence(ut, z4):
    with pytest.raises(PreconditionUnmet):
        cl.constant_product_consequence(ut.parse("1 + [[0,1],[0,0]]*x1"), ut.one())
    f = z4.parse("1 + 2*x1")
    assert cl.constant_product_consequence(f, f).is_true
    assert cl.constant_product_consequence(z4.parse("3"), z4.parse("3")).is_true


def test_idempotents(s2x, ut):
    one, x = s2x.one(), s2x.x(1)
    assert cl.is_idempotent_in_A(one).is_true and cl.idempotent_shape(one).is_true
    assert cl.is_idempotent_in_A(x).value == cl.FALSE
    assert cl.idempotent_shape(x).value == cl.FALSE
    # non-Abelian base: only the necessary condition is available
    v = cl.idempotent_shape(ut.const(E11))
    assert v.value == cl.UNSAT and v.witness["necessary_condition"]
    assert cl.idempotent_shape(ut.x(1)).value == cl.FALSE


def test_idempotent_centrality(s2x):
    for e in sorted(fr.idempotents(s2x.base)):
        assert cl.idempotent_centrality(s2x, e).is_true
    with pytest.raises(PreconditionUnmet):
        cl.idempotent_centrality(s2x, s2x.base.from_literal([[2, 0], [0, 2]]))


def test_correction_lemma():
    R = fr.zmod(4)
    assert cl.nilpotent_correction_lemma(R, 1, 0).is_true
    with pytest.raises(PreconditionUnmet):
        cl.nilpotent_correction_lemma(R, 0, 2)


def test_correction_lemma_sweep_s2():
    R = fr.s2(fr.zmod(4))
    hits = []
    for e in fr.idempotents(R):
        for s in fr.nilpotents(R):
            try:
                v = cl.nilpotent_correction_lemma(R, e, s)
            except PreconditionUnmet:
                continue
            hits.append(s)
            assert v.is_true
    assert set(hits) == {R.zero}


@pytest.mark.parametrize("text, value, witness", [
    ("0", cl.TRUE, {"u": "1", "e": "0"}),
    ("1 + 2*x1", cl.TRUE, {"u": "1", "e": "1"}),
    ("x1", cl.FALSE, {}),
])
def test_vnr(z4, text, value, witness):
    v = cl.is_vnr_in_A(z4.parse(text))
    assert v.value == value
    assert v.witness == witness


@pytest.mark.parametrize("R, r, e, u", [
    (fr.zmod(4), 2, "0", "1"),
    (fr.zmod(4), 1, "1", "1"),
    (fr.zmod(6), 3, "3", "1"),
])
def test_badawi(R, r, e, u):
    v = cl.badawi_decomposition(R, r)
    assert v.is_true and v.witness["e"] == e and v.witness["u"] == u
    assert v.witness["agrees_with_enumeration"]


def test_badawi_needs_abelian():
    assert cl.badawi_decomposition(fr.ut2(fr.zmod(2)), E11).value == cl.UNSAT


@pytest.mark.parametrize("fn, text, value", [
    (cl.is_pi_regular_in_A, "2 + 2*x1", cl.TRUE),
    (cl.is_pi_regular_in_A, "2 + x1", cl.FALSE),
    (cl.is_pi_regular_in_A, "1", cl.TRUE),
    (cl.is_vnl_in_A, "1 + 2*x1", cl.TRUE),
    (cl.is_vnl_in_A, "2*x1", cl.TRUE),
    (cl.is_vnl_in_A, "0", cl.TRUE),
    (cl.is_vnl_in_A, "x1", cl.FALSE),
    (cl.is_clean_in_A, "1 + 2*x1", cl.TRUE),
    (cl.is_clean_in_A, "x1", cl.FALSE),
    (cl.is_clean_in_A, "0", cl.TRUE),
])
def test_shape_classifiers(z4, fn, text, value):
    assert fn(z4.parse(text)).value == value


def test_clean_witnesses(z4):
    assert cl.is_clean_in_A(z4.zero()).witness["u"] == "3"
    w = cl.is_clean_in_A(z4.parse("1 + 2*x1")).witness
    assert (w["u"], w["e"], w["unit_part"]) == ("1", "0", "1 + 2*x1")
    assert cl.is_vnl_in_A(z4.parse("2*x1")).witness["side"] == "1-f"


def test_abelian_gate(ut):
    for fn in (cl.is_vnr_in_A, cl.is_pi_regular_in_A, cl.is_vnl_in_A, cl.is_clean_in_A):
        v = fn(ut.x(1))
        assert v.value == cl.UNSAT and v.missing == ("abelian",)


def test_non_ni_base_refused(m2):
    spec = nonni_extension(m2)
    v = cl.is_unit_in_A(spec.x(1))
    assert v.value == cl.UNSAT and "NI" in v.missing
    assert cl.nj_check(spec).value == cl.UNSAT


@pytest.mark.parametrize("name", ["ut2", "zmod4"])
def test_nj_check_passes(name):
    v = cl.nj_check(fixture(name), 2)
    assert v.is_true and not v.witness["failures"]


def test_verdict_json(z4):
    out = cl.is_unit_in_A(z4.parse("1 + 2*x1")).to_json()
    assert out == {"value": "true", "theorem": "units",
                   "witness": {"unit": "1", "nilpotent_part": "2*x1"}}
