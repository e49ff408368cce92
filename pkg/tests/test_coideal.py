"""Coideal subalgebra certification and the quotient module coalgebra."""

import pytest

from partialdual.coideal import (
    CoidealSubalgebra,
    action_btl,
    action_btr,
    btl_matrix,
    build_quotient,
    certify_coideal,
    dual_coideal,
)
from partialdual.examples import cyclic, group_algebra, symmetric, taft4
from partialdual.hopf import CertificationError, LinMap, coopposite, dual
from partialdual.linalg import QQ, Matrix, Vector


@pytest.fixture(scope="module")
def taft():
    h, b, zeta = taft4(QQ, 1)
    return h, b, zeta


def test_taft_coideal_structure(taft):
    h, b, _ = taft
    assert b.dim == 2
    assert b.report.ok
    assert b.unit == Vector(QQ, [1, 0])
    assert b.counit == Vector(QQ, [1, 0])
    # x * x = 0 inside B
    assert b.algebra.multiply(b.basis(1), b.basis(1)) == Vector.zero(QQ, 2)
    # Delta(x) = x (x) 1 + g (x) x in coaction coordinates
    assert b.coaction[1, 2, 0] == 1
    assert b.coaction[1, 1, 1] == 1
    assert b.coaction[0, 0, 0] == 1


def test_taft_quotient_is_group_like(taft):
    h, b, _ = taft
    q = build_quotient(b)
    assert q.dim == 2
    assert q.report.ok
    assert q.canonical
    assert q.pi.matrix == Matrix(QQ, [[1, 0, 0, 0], [0, 1, 0, 0]])
    # both residue classes are group-like
    for r in range(2):
        flat = q.coalgebra.comultiply_flat(q.basis(r))
        assert flat == q.basis(r).tensor(q.basis(r))
    assert q.coalgebra.counit == Vector(QQ, [1, 1])


def test_taft_quotient_action(taft):
    h, b, _ = taft
    q = build_quotient(b)
    one_bar = q.basis(0)
    g_bar = q.basis(1)
    g = Vector.basis(QQ, 4, 1)
    x = Vector.basis(QQ, 4, 2)
    assert action_btl(q, one_bar, g) == g_bar
    assert action_btl(q, g_bar, g) == one_bar
    assert action_btl(q, one_bar, x) == Vector.zero(QQ, 2)
    assert btl_matrix(q, g) == Matrix(QQ, [[0, 1], [1, 0]])


def test_group_case_quotient_dimensions():
    h = group_algebra(symmetric(3), QQ)
    # subgroup generated by the transposition (01): identity is index 0,
    # (01) swaps letters 0 and 1, which is permutation (1,0,2), index 2
    iota = LinMap(
        Matrix.from_columns(
            QQ, [Vector.basis(QQ, 6, 0), Vector.basis(QQ, 6, 2)], nrows=6
        )
    )
    b = certify_coideal(h, iota)
    q = build_quotient(b)
    assert (b.dim, q.dim) == (2, 3)
    assert q.report.ok


def test_rejects_non_coideal():
    h, _, _ = taft4(QQ, 0)
    # span{1, xg} is closed under products but not a left coideal
    iota = LinMap(Matrix(QQ, [[1, 0], [0, 0], [0, 0], [0, 1]]))
    with pytest.raises(CertificationError) as err:
        certify_coideal(h, iota)
    assert err.value.kind == "left-coideal"
    assert err.value.report is not None


def test_rejects_non_subalgebra():
    h = group_algebra(cyclic(4), QQ)
    # span{1, g} contains 1 and is a coideal, but g*g = g^2 escapes
    iota = LinMap(
        Matrix.from_columns(
            QQ, [Vector.basis(QQ, 4, 0), Vector.basis(QQ, 4, 1)], nrows=4
        )
    )
    with pytest.raises(CertificationError) as err:
        certify_coideal(h, iota)
    assert err.value.kind == "closed-under-multiplication"


def test_rejects_non_injective_inclusion():
    h, _, _ = taft4(QQ, 0)
    iota = LinMap(Matrix(QQ, [[1, 1], [0, 0], [0, 0], [0, 0]]))
    with pytest.raises(CertificationError) as err:
        certify_coideal(h, iota)
    assert err.value.kind == "iota-injective"


def test_rejects_missing_unit():
    h, _, _ = taft4(QQ, 0)
    iota = LinMap(Matrix(QQ, [[0], [0], [1], [0]]))
    with pytest.raises(CertificationError) as err:
        certify_coideal(h, iota)
    assert err.value.kind == "contains-unit"


def test_dimension_law_abort_on_corrupt_data(taft):
    h, b, _ = taft
    corrupt = CoidealSubalgebra(
        h, b.iota, b.mult, b.unit, Vector.zero(QQ, 2), b.coaction, b.report
    )
    with pytest.raises(CertificationError) as err:
        build_quotient(corrupt)
    assert err.value.kind == "dim-product-law"


def test_supplied_presentation_round_trip(taft):
    h, b, _ = taft
    q = build_quotient(b)
    again = build_quotient(b, pi=q.pi, lift=q.lift)
    assert not again.canonical
    assert again.pi == q.pi
    assert again.coalgebra == q.coalgebra
    assert again.action == q.action


def test_supplied_presentation_must_split(taft):
    h, b, _ = taft
    q = build_quotient(b)
    bad_lift = LinMap(Matrix.zeros(QQ, 4, 2))
    with pytest.raises(CertificationError) as err:
        build_quotient(b, pi=q.pi, lift=bad_lift)
    assert err.value.kind == "pi-splits-lift"


def test_dual_coideal_certifies(taft):
    h, b, _ = taft
    q = build_quotient(b)
    cstar = dual_coideal(q)
    assert cstar.dim == 2
    assert cstar.parent == coopposite(dual(h))
    assert cstar.report.ok


def test_btr_action_values(taft):
    h, b, _ = taft
    q = build_quotient(b)
    # dual basis: p_1, p_g, p_x, p_xg on (1, g, x, xg); B* basis (1*, x*)
    p1 = Vector.basis(QQ, 4, 0)
    pg = Vector.basis(QQ, 4, 1)
    px = Vector.basis(QQ, 4, 2)
    one_star = Vector.basis(QQ, 2, 0)
    x_star = Vector.basis(QQ, 2, 1)
    assert action_btr(q, p1, one_star) == one_star
    assert action_btr(q, pg, one_star) == Vector.zero(QQ, 2)
    # <p_x |> 1*, b> = <1*, b <- p_x>: only b = x has x in a left coaction leg
    assert action_btr(q, px, one_star) == x_star
