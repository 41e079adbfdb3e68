from fractions import Fraction

import pytest

import paraline as pl

K2 = pl.Rank.finite(2)


def test_words():
    w = pl.Word.parse("g h H", K2)
    assert str(w) == "x1"
    assert str(pl.Word.parse("x1 x1 x1 X2", K2)) == "x1^3 X2"
    assert str(pl.reduce([(2, 1), (1, -1), (1, 1), (2, 1)], K2)) == "x2^2"
    assert len(w * w.inverse()) == 0
    assert pl.classify_word(pl.Word(), K2) == (2, "-")
    assert pl.class_name(2, "+", K2) == "C"
    with pytest.raises(ValueError):
        pl.Word.from_letters([(1, 1), (1, -1)])
    with pytest.raises(ValueError):
        pl.Word.parse("x3", K2)


def test_labeling():
    lab = pl.VertexLabeling(K2)
    assert str(lab.word_of_label(-3)) == "x1 x2"
    assert lab.label_of_word(pl.Word.parse("h h", K2)) == 7
    assert [str(w) for w in lab.enumerate(5)] == ["e", "x1", "X1", "x2", "X2"]
    assert str(lab.connecting_word(1, 3)) == "x1"
    assert lab.apply(pl.Word.parse("x2", K2), 0) == 2
    assert pl.VertexLabeling(pl.Rank.omega()).label_of_word(pl.Word.parse("x3", pl.Rank.omega())) == 3
    assert lab.ball_dot(1).count("->") == 4


def test_rigid_maps():
    fig = pl.RigidMap.from_cycles("(012534)")
    assert pl.evaluate(fig, Fraction(1, 2)) == Fraction(3, 2)
    assert pl.evaluate_inverse(fig, Fraction(3, 2)) == Fraction(1, 2)
    assert [o for _, o in fig.pieces(0, 6)] == [1, 1, 3, 1, -4, -2]
    lab = pl.VertexLabeling(K2)
    sigma = pl.RigidMap.from_word(pl.Word.parse("x1", K2), lab)
    tau = pl.RigidMap.from_word(pl.Word.parse("x2", K2), lab)
    assert pl.evaluate(sigma.compose(tau), Fraction(1, 4)) == Fraction(-11, 4)
    assert pl.evaluate(sigma.compose(sigma.inverse()), Fraction(-7, 3)) == Fraction(-7, 3)
    report = pl.audit(fig, -1, 7, samples=200)
    assert report["pass"] and report["discontinuities"] == [0, 2, 3, 4, 5, 6]


def test_decomposition():
    inst = pl.ParadoxInstance(K2)
    assert [inst.classify_interval(n) for n in (0, 1, 6, 7)] == ["D", "A", "C", "D"]
    assert pl.classify_point(inst, Fraction(-1, 2)) == "B"
    rep = pl.verify(inst, -2000, 2000, workers=2)
    assert rep["pass"]
    assert rep["coverage"]["1"]["covered"] == 4001
    assert rep["coverage"]["2"]["covered"] == 4001
    assert pl.measure(inst, -100, 100)["total"] == 201
    assert pl.certify(inst, 3, -50, 50)["words"] == 4 + 12 + 36
    with pytest.raises(pl.BudgetExceeded):
        pl.certify(inst, 10, -5, 5, budget=10)
    om = pl.ParadoxInstance(pl.Rank.omega())
    assert pl.verify(om, -300, 300, pair_limit=5)["pass"]
    assert "#e7298a" in inst.line_strip_svg(0, 0)
