"""Left coideal subalgebras and their quotient module coalgebras.

A coideal subalgebra is handed over as an inclusion matrix iota; the
certifier checks injectivity, unitality, closure under products and the
left coideal property, and stores the induced structure constants.  The
quotient by the induced right ideal carries the quotient coalgebra, a
right module action on the quotient, and a dual-side action of the dual
Hopf algebra on the dual of the coideal.  Quotient presentations are
canonical by default (complementing the row-reduced ideal basis with
standard coordinates) but can be supplied, which the induced systems of
the six-row table rely on.
"""

from __future__ import annotations

from partialdual.hopf import (
    Algebra,
    CertificationError,
    Coalgebra,
    HopfAlgebra,
    LinMap,
    Report,
    coopposite,
    dual,
    vector_witness,
)
from partialdual.linalg import (
    Matrix,
    Tensor3,
    Vector,
    contract,
    nullspace,
    rref,
    solve,
    subspace_basis,
)

__all__ = [
    "CoidealSubalgebra",
    "CoidealQuotient",
    "certify_coideal",
    "build_quotient",
    "action_btl",
    "btl_matrix",
    "action_btr",
    "btr_matrix",
    "dual_coideal",
]


class CoidealSubalgebra:
    """A certified left coideal subalgebra B of a Hopf algebra.

    Stores the inclusion, the induced multiplication and unit in B
    coordinates, the restricted counit, and the coaction tensor
    Delta(iota b) = sum coaction[b, j, k] e_j (x) iota(e_k).
    """

    def __init__(
        self,
        parent: HopfAlgebra,
        iota: LinMap,
        mult: Tensor3,
        unit: Vector,
        counit: Vector,
        coaction: Tensor3,
        report: Report,
    ):
        self.parent = parent
        self.iota = iota
        self.dim = iota.source
        self.mult = mult
        self.unit = unit
        self.counit = counit
        self.coaction = coaction
        self.report = report
        self._algebra: Algebra | None = None

    @property
    def field(self):
        return self.parent.field

    @property
    def algebra(self) -> Algebra:
        if self._algebra is None:
            self._algebra = Algebra(self.field, self.mult, self.unit)
        return self._algebra

    def include(self, v: Vector) -> Vector:
        return self.iota(v)

    def basis(self, i: int) -> Vector:
        return Vector.basis(self.field, self.dim, i)

    def __repr__(self) -> str:
        return (
            f"CoidealSubalgebra(dim={self.dim} in dim={self.parent.dim}"
            f" over {self.field.descriptor})"
        )


def certify_coideal(h: HopfAlgebra, iota: LinMap) -> CoidealSubalgebra:
    """Certify iota : B -> H as a left coideal subalgebra inclusion.

    Raises CertificationError on the first structural failure; the
    exception carries the full report.
    """
    field = h.field
    n = h.dim
    b = iota.source
    if iota.target != n:
        raise CertificationError(
            "iota-shape", f"inclusion lands in dimension {iota.target}, parent has {n}"
        )
    if iota.field is not field:
        raise CertificationError("iota-shape", "inclusion is over the wrong field")
    report = Report(f"coideal subalgebra of {h.name or 'H'}")

    report.add(
        "iota-injective",
        iota.matrix.rank() == b,
        f"inclusion matrix has rank {iota.matrix.rank()} < {b}",
    )
    report.raise_if_failed()

    unit_b = solve(iota.matrix, h.unit)
    report.add("contains-unit", unit_b is not None, "1 is not in the image of iota")
    report.raise_if_failed()
    assert unit_b is not None

    mult_rows = []
    ok = True
    witness = ""
    for i in range(b):
        plane = []
        for j in range(b):
            prod = h.algebra.multiply(iota.column(i), iota.column(j))
            x = solve(iota.matrix, prod)
            if x is None:
                ok = False
                witness = f"iota(e{i}) iota(e{j}) is not in the image of iota"
                x = Vector.zero(field, b)
            plane.append(list(x))
        mult_rows.append(plane)
    report.add("closed-under-multiplication", ok, witness)
    report.raise_if_failed()
    mult_b = Tensor3(field, mult_rows, dims=(b, b, b))

    coaction_rows = []
    ok = True
    witness = ""
    for i in range(b):
        d = h.coalgebra.comultiply(iota.column(i))
        plane = []
        for j in range(n):
            leg = Vector(field, d.rows[j])
            x = solve(iota.matrix, leg)
            if x is None:
                ok = False
                witness = (
                    f"Delta(iota(e{i})) has second leg outside iota(B) at e{j} (x) -"
                )
                x = Vector.zero(field, b)
            plane.append(list(x))
        coaction_rows.append(plane)
    report.add("left-coideal", ok, witness)
    report.raise_if_failed()
    coaction = Tensor3(field, coaction_rows, dims=(b, n, b))

    counit_b = Vector(field, [h.counit.dot(iota.column(i)) for i in range(b)])
    return CoidealSubalgebra(h, iota, mult_b, unit_b, counit_b, coaction, report)


class CoidealQuotient:
    """The quotient coalgebra C = H / (B+ H) with its right H-action.

    Carries the projection pi, a linear section lift, the quotient
    coalgebra, the action tensor for x <| h = pi(lift(x) h), and lazy
    dual-side data: the dual coideal C* inside the co-opposite dual and
    the action tensor for h* |> b* on B*.
    """

    def __init__(
        self,
        b: CoidealSubalgebra,
        pi: LinMap,
        lift: LinMap,
        coalgebra: Coalgebra,
        action: Tensor3,
        ideal_basis: Matrix,
        canonical: bool,
        report: Report,
    ):
        self.coideal = b
        self.parent = b.parent
        self.pi = pi
        self.lift = lift
        self.dim = pi.target
        self.coalgebra = coalgebra
        self.action = action
        self.ideal_basis = ideal_basis
        self.canonical = canonical
        self.report = report
        self._dual_parent: HopfAlgebra | None = None
        self._dual_coideal: CoidealSubalgebra | None = None
        self._section: Matrix | None = None
        self._btr: Tensor3 | None = None

    @property
    def field(self):
        return self.parent.field

    @property
    def dual_parent(self) -> HopfAlgebra:
        """The co-opposite of the dual, the ambient Hopf algebra of C*."""
        if self._dual_parent is None:
            self._dual_parent = coopposite(dual(self.parent))
        return self._dual_parent

    def basis(self, i: int) -> Vector:
        return Vector.basis(self.field, self.dim, i)

    def __repr__(self) -> str:
        return (
            f"CoidealQuotient(dim={self.dim} of dim={self.parent.dim}"
            f" over {self.field.descriptor})"
        )


def build_quotient(
    b: CoidealSubalgebra, pi: LinMap | None = None, lift: LinMap | None = None
) -> CoidealQuotient:
    """Build and verify the quotient of the parent by the right ideal B+ H.

    Without arguments the presentation is canonical: the ideal is row
    reduced and the non-pivot standard coordinates become the quotient
    basis.  A supplied (pi, lift) pair is verified against the same
    ideal instead; it must satisfy pi lift = id and ker pi = B+ H.
    """
    h = b.parent
    field = h.field
    n = h.dim
    report = Report("quotient by B+ H")

    bplus = nullspace(Matrix(field, [list(b.counit)], ncols=b.dim))
    spanning = []
    for r in range(bplus.nrows):
        v = b.iota(bplus.row(r))
        for j in range(n):
            spanning.append(h.algebra.multiply(v, h.basis(j)))
    ideal = subspace_basis(spanning, field=field, length=n)
    c = n - ideal.nrows

    report.add(
        "dim-product-law",
        b.dim * c == n,
        f"dim B * dim C = {b.dim} * {c} != {n} = dim H",
    )
    report.raise_if_failed()

    if (pi is None) != (lift is None):
        raise ValueError("supply pi and lift together or not at all")
    canonical = pi is None
    if pi is None:
        pivot_set = set(rref(ideal)[1])
        free = [j for j in range(n) if j not in pivot_set]
        basis_rows = [list(ideal.rows[r]) for r in range(ideal.nrows)]
        for j in free:
            basis_rows.append(list(Vector.basis(field, n, j)))
        change = Matrix(field, basis_rows, ncols=n).transpose().inverse()
        pi = LinMap(Matrix(field, change.rows[ideal.nrows :], ncols=n))
        lift = LinMap(
            Matrix.from_columns(
                field, [Vector.basis(field, n, j) for j in free], nrows=n
            )
        )
    assert lift is not None
    if pi.source != n or pi.target != c:
        raise CertificationError(
            "pi-shape", f"projection must be {c} x {n}, got {pi.target} x {pi.source}"
        )
    if lift.source != c or lift.target != n:
        raise CertificationError(
            "lift-shape", f"section must be {n} x {c}, got {lift.target} x {lift.source}"
        )

    report.add(
        "pi-splits-lift",
        pi.matrix @ lift.matrix == Matrix.identity(field, c),
        "pi lift != id",
    )
    ok = all(
        (pi(ideal.row(r))).is_zero() for r in range(ideal.nrows)
    )
    report.add("pi-kills-ideal", ok, "pi does not vanish on B+ H")
    report.add(
        "pi-surjective",
        pi.matrix.rank() == c,
        f"projection has rank {pi.matrix.rank()} < {c}",
    )
    report.raise_if_failed()

    comult_rows = []
    for r in range(c):
        d = h.coalgebra.comultiply(lift.column(r))
        projected = pi.matrix @ d @ pi.matrix.transpose()
        comult_rows.append([list(row) for row in projected.rows])
    comult_c = Tensor3(field, comult_rows, dims=(c, c, c))
    counit_c = Vector(field, [h.counit.dot(lift.column(r)) for r in range(c)])
    coalg = Coalgebra(field, comult_c, counit_c)

    ok = True
    witness = ""
    for i in range(n):
        lhs = pi.matrix @ h.coalgebra.comultiply(h.basis(i)) @ pi.matrix.transpose()
        rhs = coalg.comultiply(pi(h.basis(i)))
        if lhs != rhs:
            ok = False
            witness = f"Delta_C(pi(e{i})) disagrees with (pi (x) pi)Delta(e{i})"
            break
    report.add("pi-coalgebra-map", ok, witness)
    report.add(
        "pi-counit",
        Vector(field, [counit_c.dot(pi(h.basis(i))) for i in range(n)]) == h.counit,
        "eps_C after pi != eps",
    )

    one_c = pi(h.unit)
    expected = Matrix(
        field,
        [[x * e for e in b.counit.entries] for x in one_c.entries],
        ncols=b.dim,
    )
    report.add(
        "counit-splitting",
        pi.matrix @ b.iota.matrix == expected,
        "pi iota != eps_B(-) pi(1)",
    )

    ok = True
    witness = ""
    for r in range(ideal.nrows):
        v = ideal.row(r)
        for j in range(n):
            img = pi(h.algebra.multiply(v, h.basis(j)))
            if not img.is_zero():
                ok = False
                witness = f"pi((B+ H) e{j}) != 0 at ideal basis row {r}"
                break
        if not ok:
            break
    report.add("action-well-defined", ok, witness)
    report.raise_if_failed()

    action_rows = []
    for r in range(c):
        v = lift.column(r)
        plane = []
        for j in range(n):
            plane.append(list(pi(h.algebra.multiply(v, h.basis(j)))))
        action_rows.append(plane)
    action = Tensor3(field, action_rows, dims=(c, n, c))

    ok = True
    witness = ""
    for i in range(n):
        for j in range(n):
            lhs = pi(h.algebra.multiply(h.basis(i), h.basis(j)))
            rhs = contract(action, 1, h.basis(j)).transpose() @ pi(h.basis(i))
            if lhs != rhs:
                ok = False
                witness = f"pi(e{i} e{j}) != pi(e{i}) <| e{j}"
                break
        if not ok:
            break
    report.add("pi-module-map", ok, witness)
    report.raise_if_failed()

    return CoidealQuotient(b, pi, lift, coalg, action, ideal, canonical, report)


def action_btl(q: CoidealQuotient, x: Vector, h: Vector) -> Vector:
    """The right action x <| h = pi(lift(x) h) on the quotient."""
    return contract(q.action, 0, x).transpose() @ h


def btl_matrix(q: CoidealQuotient, h: Vector) -> Matrix:
    """Matrix of x -> x <| h."""
    return contract(q.action, 1, h).transpose()


def _dual_section(q: CoidealQuotient) -> Matrix:
    """A fixed linear section of iota* : H* -> B* (columns solve iota^T s = e_j)."""
    if q._section is None:
        iota_star = q.coideal.iota.matrix.transpose()
        cols = []
        for j in range(q.coideal.dim):
            s = solve(iota_star, Vector.basis(q.field, q.coideal.dim, j))
            if s is None:
                raise CertificationError(
                    "iota-star-not-surjective", "restriction of functionals failed"
                )
            cols.append(s)
        q._section = Matrix.from_columns(q.field, cols, nrows=q.parent.dim)
    return q._section


def _btr_tensor(q: CoidealQuotient) -> Tensor3:
    """Action tensor of h* |> b* = iota*(h* varsigma(b*)), with checks.

    Well-definedness over the choice of section needs H* ker(iota*) to
    stay inside ker(iota*); that and the adjointness against the right
    hit of functionals on B are verified on construction.
    """
    if q._btr is not None:
        return q._btr
    field = q.field
    n = q.parent.dim
    bdim = q.coideal.dim
    hstar = dual(q.parent)
    iota_star = q.coideal.iota.matrix.transpose()
    section = _dual_section(q)

    kernel = nullspace(iota_star)
    for r in range(kernel.nrows):
        k = kernel.row(r)
        for i in range(n):
            img = iota_star @ hstar.algebra.multiply(hstar.basis(i), k)
            if not img.is_zero():
                raise CertificationError(
                    "btr-not-well-defined",
                    f"H* ker(iota*) escapes ker(iota*) at f{i}, kernel row {r}",
                )

    rows = []
    for i in range(n):
        plane = []
        for j in range(bdim):
            img = iota_star @ hstar.algebra.multiply(hstar.basis(i), section.column(j))
            plane.append(list(img))
        rows.append(plane)
    btr = Tensor3(field, rows, dims=(n, bdim, bdim))

    # adjointness: <h* |> b*, b> = <b*, b <- h*>, where b <- h* pairs the
    # first coaction leg against h*
    for i in range(n):
        hit_mat = contract(q.coideal.coaction, 1, hstar.basis(i))
        for j in range(bdim):
            acted = btr.data[i][j]
            for t in range(bdim):
                if acted[t] != hit_mat[t, j]:
                    raise CertificationError(
                        "btr-adjoint-mismatch",
                        f"<f{i} |> b*{j}, b{t}> != <b*{j}, b{t} <- f{i}>",
                    )
    q._btr = btr
    return btr


def action_btr(q: CoidealQuotient, hstar: Vector, bstar: Vector) -> Vector:
    """The left action h* |> b* of the dual Hopf algebra on B*."""
    return contract(_btr_tensor(q), 0, hstar).transpose() @ bstar


def btr_matrix(q: CoidealQuotient, hstar: Vector) -> Matrix:
    """Matrix of b* -> h* |> b*."""
    return contract(_btr_tensor(q), 0, hstar).transpose()


def dual_coideal(q: CoidealQuotient) -> CoidealSubalgebra:
    """C* as a certified left coideal subalgebra of the co-opposite dual."""
    if q._dual_coideal is None:
        q._dual_coideal = certify_coideal(
            q.dual_parent, LinMap(q.pi.matrix.transpose())
        )
    return q._dual_coideal
