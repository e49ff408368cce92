"""Cointegral search, the derived splitting gamma, and PAMS certification."""

import pytest

from partialdual.coideal import build_quotient, certify_coideal
from partialdual.examples import cyclic, group_algebra, symmetric, taft4
from partialdual.hopf import (
    CertificationError,
    LinMap,
    biopposite,
    coopposite,
    dual,
    opposite,
)
from partialdual.linalg import QQ, Matrix, PrimeField, Vector
from partialdual.pams import (
    INDUCED_KINDS,
    biunitarize,
    certify_pams,
    cointegral_space,
    find_cointegral,
    gamma_from_zeta,
    induced_pams,
)

F5 = PrimeField(5)


def taft_quotient(field, lam):
    h, b, zeta = taft4(field, lam)
    return h, build_quotient(b), zeta


@pytest.fixture(scope="module")
def taft_pams():
    h, q, zeta = taft_quotient(QQ, 1)
    return h, q, certify_pams(q, zeta)


@pytest.fixture(scope="module")
def s3_pams():
    h = group_algebra(symmetric(3), QQ)
    # subgroup generated by the transposition (01), indices {0, 2}
    iota = LinMap(
        Matrix.from_columns(
            QQ, [Vector.basis(QQ, 6, 0), Vector.basis(QQ, 6, 2)], nrows=6
        )
    )
    q = build_quotient(certify_coideal(h, iota))
    return h, q, certify_pams(q, find_cointegral(q))


@pytest.mark.parametrize(
    "field, lam",
    [(QQ, 0), (QQ, 1), (QQ, -1), (QQ, 2), (F5, 0), (F5, 3)],
    ids=["q0", "q1", "q-1", "q2", "f5-0", "f5-3"],
)
def test_taft_family_certifies(field, lam):
    h, q, zeta = taft_quotient(field, lam)
    p = certify_pams(q, zeta)
    assert p.report.ok
    # gamma sends the class of 1 to 1 and the class of g to g - lam * xg
    assert p.gamma.column(0) == h.unit
    expected = Vector.basis(field, 4, 1) - Vector.basis(field, 4, 3).scale(
        field.coerce(lam)
    )
    assert p.gamma.column(1) == expected


def test_taft_zeta_bar_golden(taft_pams):
    _, _, p = taft_pams
    assert p.zeta_bar.matrix == Matrix(QQ, [[1, 1, 0, 0], [0, -1, -1, -1]])


def test_gamma_from_zeta_matches_certified(taft_pams):
    _, q, p = taft_pams
    assert gamma_from_zeta(q, p.zeta) == p.gamma


def test_taft_solution_space_is_a_line():
    _, q, _ = taft_quotient(QQ, 1)
    particular, homogeneous = cointegral_space(q)
    assert particular is not None
    assert homogeneous.nrows == 1
    # flattened as z[t * 4 + m]: the canonical solution is the lam = 0
    # cointegral and the free direction adds x to zeta(g)
    assert particular == Vector(QQ, [1, 1, 0, 0, 0, 0, 1, 1])
    assert homogeneous.row(0) == Vector.basis(QQ, 8, 5)


def test_solution_space_dimension_group_case(s3_pams):
    _, q, _ = s3_pams
    particular, homogeneous = cointegral_space(q)
    # one affine line of zeta(r) in B per non-identity coset of <(01)>
    assert particular is not None
    assert homogeneous.nrows == 2


def test_find_cointegral_full_coideal_is_identity():
    h = group_algebra(cyclic(2), QQ)
    q = build_quotient(certify_coideal(h, LinMap(Matrix.identity(QQ, 2))))
    particular, homogeneous = cointegral_space(q)
    assert homogeneous.nrows == 0
    assert find_cointegral(q) == LinMap.identity(QQ, 2)
    p = certify_pams(q, find_cointegral(q))
    assert q.dim == 1
    assert p.gamma(q.pi(h.unit)) == h.unit


def test_find_cointegral_unit_coideal_is_counit():
    h, _, _ = taft4(QQ, 1)
    q = build_quotient(certify_coideal(h, LinMap(Matrix(QQ, [[1], [0], [0], [0]]))))
    zeta = find_cointegral(q)
    assert zeta.matrix == Matrix(QQ, [[1, 1, 0, 0]])
    p = certify_pams(q, zeta)
    assert p.gamma == LinMap.identity(QQ, 4)


def test_find_cointegral_is_deterministic():
    _, q, _ = taft_quotient(QQ, 1)
    found = find_cointegral(q, {"seed": 3, "bound": 2})
    assert found == find_cointegral(q, {"seed": 3, "bound": 2})
    # the canonical particular solution is already invertible, so the
    # seed never comes into play here
    assert found == find_cointegral(q, {"seed": 11})
    assert found.matrix == Matrix(QQ, [[1, 1, 0, 0], [0, 0, 1, 1]])


def test_find_cointegral_user_supplied(taft_pams):
    _, q, p = taft_pams
    strategy = {"kind": "user-supplied", "zeta": p.zeta}
    assert find_cointegral(q, strategy) == p.zeta
    bad = LinMap(Matrix(QQ, [[1, 1, 0, 0], [0, 1, 0, 1]]))
    with pytest.raises(CertificationError) as err:
        find_cointegral(q, {"kind": "user-supplied", "zeta": bad})
    assert err.value.kind == "zeta-not-module-map"


def test_find_cointegral_attempt_cap():
    _, q, _ = taft_quotient(QQ, 1)
    with pytest.raises(CertificationError) as err:
        find_cointegral(q, {"max_attempts": 0})
    assert err.value.kind == "search-exhausted"


def test_find_cointegral_rejects_unknown_strategy():
    _, q, _ = taft_quotient(QQ, 1)
    with pytest.raises(ValueError):
        find_cointegral(q, {"kind": "exhaustive"})
    with pytest.raises(ValueError):
        find_cointegral(q, {"bond": 2})


def test_biunitarize_repairs_unit_translation():
    _, q, zeta0 = taft_quotient(QQ, 0)
    shifted = LinMap(
        q.coideal.algebra.right_mult_matrix(Vector(QQ, [1, 1])) @ zeta0.matrix
    )
    assert shifted(q.parent.unit) != q.coideal.unit
    assert biunitarize(q, shifted) == zeta0


def test_biunitarize_repairs_counit_defect():
    _, q, zeta0 = taft_quotient(QQ, 0)
    # unit is fine but eps_B(zeta(g)) = 2
    skew = LinMap(Matrix(QQ, [[1, 2, 0, 0], [0, 0, 1, 2]]))
    assert biunitarize(q, skew) == zeta0
    scaled = LinMap(zeta0.matrix.scale(QQ.coerce(2)))
    assert biunitarize(q, scaled) == zeta0


def test_biunitarize_is_idempotent(taft_pams):
    _, q, p = taft_pams
    assert biunitarize(q, p.zeta) == p.zeta
    h = group_algebra(cyclic(2), QQ)
    q2 = build_quotient(certify_coideal(h, LinMap(Matrix.identity(QQ, 2))))
    assert biunitarize(q2, LinMap.identity(QQ, 2)) == LinMap.identity(QQ, 2)


def test_biunitarize_rejects_non_invertible():
    _, q, _ = taft_quotient(QQ, 0)
    with pytest.raises(CertificationError) as err:
        biunitarize(q, LinMap(Matrix.zeros(QQ, 2, 4)))
    assert err.value.kind == "not-invertible"


def test_gamma_from_zeta_rejects_broken_inputs(taft_pams):
    _, q, _ = taft_pams
    not_module = LinMap(Matrix(QQ, [[1, 1, 0, 0], [0, 1, 0, 1]]))
    with pytest.raises(CertificationError) as err:
        gamma_from_zeta(q, not_module)
    assert err.value.kind == "zeta-not-module-map"
    not_biunitary = LinMap(Matrix(QQ, [[1, 2, 0, 0], [0, 0, 1, 2]]))
    with pytest.raises(CertificationError) as err:
        gamma_from_zeta(q, not_biunitary)
    assert err.value.kind == "zeta-not-biunitary"


def test_certify_rejects_broken_zeta(taft_pams):
    _, q, _ = taft_pams
    with pytest.raises(CertificationError) as err:
        certify_pams(q, LinMap(Matrix(QQ, [[1, 1, 0, 0], [0, 1, 0, 1]])))
    assert err.value.kind == "zeta-module-map"
    assert err.value.report is not None


def test_certify_rejects_perturbed_gamma(taft_pams):
    _, q, p = taft_pams
    off_by_x = Matrix(QQ, [[1, 0], [0, 1], [0, 1], [0, -1]])
    with pytest.raises(CertificationError) as err:
        certify_pams(q, p.zeta, LinMap(off_by_x))
    assert err.value.kind == "gamma-comodule-map"
    with pytest.raises(CertificationError) as err:
        certify_pams(q, p.zeta, LinMap(Matrix(QQ, [[1], [0], [0], [0]])))
    assert err.value.kind == "gamma-shape"


def test_certify_accepts_explicit_gamma(taft_pams):
    _, q, p = taft_pams
    again = certify_pams(q, p.zeta, p.gamma)
    assert again.gamma == p.gamma
    assert again.zeta_bar == p.zeta_bar
    assert again.gamma_bar == p.gamma_bar


def test_group_pams_certifies(s3_pams):
    h, q, p = s3_pams
    assert p.report.ok
    assert p.coideal.dim * p.quotient.dim == h.dim
    # the canonical zeta collapses each coset to its representative image
    assert p.zeta.matrix @ p.coideal.iota.matrix == Matrix.identity(QQ, 2)


def test_induced_rows_all_certify(taft_pams):
    h, _, p = taft_pams
    expected_parent = {
        "identity": h,
        "op": opposite(h),
        "cop": coopposite(h),
        "biop-dual": biopposite(dual(h)),
        "cop-dual": coopposite(dual(h)),
        "op-dual": opposite(dual(h)),
    }
    for kind in INDUCED_KINDS:
        induced = induced_pams(p, kind)
        assert induced.report.ok, kind
        assert induced.parent == expected_parent[kind], kind


def test_induced_identity_row_preserves_maps(taft_pams):
    _, q, p = taft_pams
    same = induced_pams(p, "identity")
    assert same.zeta == p.zeta
    assert same.gamma == p.gamma
    assert same.quotient.pi == q.pi


def test_induced_biop_dual_is_involutive(taft_pams):
    h, q, p = taft_pams
    once = induced_pams(p, "biop-dual")
    assert (once.coideal.dim, once.quotient.dim) == (q.dim, q.coideal.dim)
    twice = induced_pams(once, "biop-dual")
    assert twice.parent == h
    assert twice.zeta == p.zeta
    assert twice.gamma == p.gamma
    assert twice.coideal.iota == q.coideal.iota
    assert twice.coideal.mult == q.coideal.mult
    assert twice.quotient.pi == q.pi
    assert twice.quotient.action == q.action


def test_induced_dimension_swap_group_case(s3_pams):
    h, q, p = s3_pams
    flipped = induced_pams(p, "biop-dual")
    assert (flipped.coideal.dim, flipped.quotient.dim) == (3, 2)
    assert flipped.parent == biopposite(dual(h))


def test_induced_op_of_full_coideal_is_trivial():
    h = group_algebra(cyclic(2), QQ)
    q = build_quotient(certify_coideal(h, LinMap(Matrix.identity(QQ, 2))))
    p = certify_pams(q, LinMap.identity(QQ, 2))
    flipped = induced_pams(p, "op")
    assert flipped.zeta == LinMap.identity(QQ, 2)
    assert flipped.gamma.matrix == Matrix(QQ, [[1], [0]])


def test_induced_rows_certify_mod_p():
    _, q, zeta = taft_quotient(F5, 3)
    p = certify_pams(q, zeta)
    for kind in INDUCED_KINDS:
        assert induced_pams(p, kind).report.ok, kind


def test_induced_rejects_unknown_kind(taft_pams):
    _, _, p = taft_pams
    with pytest.raises(ValueError):
        induced_pams(p, "sideways")
