import kites


def test_builtin_algebra_verifies():
    g = kites.builtin("l3")
    assert kites.verify_algebra(g)["pass"]
    assert "mv" in kites.classify_algebra(g)
    assert "l3" in kites.builtin_names()


def test_algebra_round_trip():
    g = kites.builtin("g3")
    text = kites.serialize_algebra(g)
    again = kites.parse_algebra(text)
    assert kites.serialize_algebra(again) == text


def test_kite_ops_and_literals():
    g = kites.builtin("chain2")
    k = kites.Kite(g, kites.cycle(3), 3)
    x = k.parse("@1[0,1,1]")
    assert k.str(x) == "@1[0,1,1]"
    top = k.top()
    assert k.mul(top, x) == x
    assert k.leq(k.mul(x, x), x)
    assert k.leq(x, k.rdiv(k.mul(x, x), x))


def test_axiom_report_deterministic():
    g = kites.builtin("l3")
    f = kites.cycle(2)
    a = kites.kite_axiom_report(g, f, depth=1, samples=50, seed=7)
    b = kites.kite_axiom_report(g, f, depth=1, samples=50, seed=7)
    assert a == b
    assert a["pass"]


def test_si_verdicts():
    g = kites.builtin("l3")
    assert kites.si_kite(g, kites.cycle(3))["si"]
    assert not kites.si_kite(g, kites.loops(2))["si"]


def test_frame_classification():
    c = kites.classify_frame(kites.cycle(4))
    assert c["tag"] == "cycle" and c["cycle_len"] == 4 and c["si_shape"]
    assert kites.canonical_form(kites.loops(2)) == "finite:C1,C1"


def test_transformation_and_induced_map():
    t = kites.Transformation.explicit(kites.cycle(4), kites.cycle(2), [0, 1, 0, 1])
    assert kites.is_transformation(t)["valid"]
    rep = kites.hom_report(t, kites.builtin("chain2"), depth=1, samples=100, seed=3)
    assert rep["pass"]
    assert kites.lemma_report(t, depth=6)["pass"]

    bad = kites.Transformation.explicit(kites.cycle(4), kites.cycle(2), [0, 0, 1, 1])
    chk = kites.is_transformation(bad)
    assert not chk["valid"]


def test_embedding_smoke():
    g = kites.builtin("chain2")
    rep = kites.embedding_report(g, "phi1", trunc_k=8, depth=2, samples=60, seed=5)
    assert rep["pass"]
