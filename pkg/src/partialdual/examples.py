"""Concrete input builders: groups, group algebras, the Taft algebra,
matched pairs and their bismash products, and split-projection systems.

Everything returned here is certified on the way out, so tests and the
command line can treat these as known-good objects.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

from partialdual.coideal import CoidealSubalgebra, build_quotient, certify_coideal
from partialdual.coideal import _dual_section
from partialdual.hopf import (
    CertificationError,
    HopfAlgebra,
    LinMap,
    biopposite,
    convolution_inverse,
    dual,
    verify_hopf,
)
from partialdual.linalg import Field, Matrix, Tensor3, Vector, nullspace
from partialdual.pams import Pams, certify_pams, gamma_from_zeta

__all__ = [
    "FiniteGroup",
    "MatchedPair",
    "bismash_product",
    "cyclic",
    "direct_product_pair",
    "group_algebra",
    "matched_pair_hopf",
    "pams_from_split_projection",
    "s3_pair",
    "symmetric",
    "taft4",
]


class FiniteGroup:
    """A finite group as a multiplication table over indices 0..order-1.

    The table is validated on construction: associativity, a two-sided
    identity and two-sided inverses.
    """

    def __init__(self, table: Sequence[Sequence[int]], name: str = ""):
        m = len(table)
        self.table = tuple(tuple(row) for row in table)
        self.name = name
        if any(len(row) != m for row in self.table):
            raise ValueError("multiplication table is not square")
        if any(not 0 <= x < m for row in self.table for x in row):
            raise ValueError("multiplication table entry out of range")
        identity = None
        for e in range(m):
            if all(self.table[e][i] == i and self.table[i][e] == i for i in range(m)):
                identity = e
                break
        if identity is None:
            raise ValueError("no two-sided identity element")
        self.identity = identity
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                        raise ValueError(f"associativity fails at ({i}, {j}, {k})")
        inv = []
        for i in range(m):
            found = None
            for j in range(m):
                if self.table[i][j] == identity and self.table[j][i] == identity:
                    found = j
                    break
            if found is None:
                raise ValueError(f"element {i} has no inverse")
            inv.append(found)
        self.inverses = tuple(inv)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return self.inverses[i]

    def direct_product(self, other: "FiniteGroup") -> "FiniteGroup":
        """Pairs (a, b) indexed a * other.order + b."""
        m2 = other.order
        size = self.order * m2
        table = [
            [
                self.mul(i // m2, j // m2) * m2 + other.mul(i % m2, j % m2)
                for j in range(size)
            ]
            for i in range(size)
        ]
        name = f"{self.name}x{other.name}" if self.name and other.name else ""
        return FiniteGroup(table, name=name)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"FiniteGroup(order={self.order}{label})"


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    return FiniteGroup(
        [[(i + j) % n for j in range(n)] for i in range(n)], name=f"C{n}"
    )


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group on n letters; elements are permutation tuples in
    lexicographic order, composed as (s t)(x) = s(t(x))."""
    elems = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}
    table = [
        [index[tuple(s[t[x]] for x in range(n))] for t in elems] for s in elems
    ]
    return FiniteGroup(table, name=f"S{n}")


def group_algebra(g: FiniteGroup, field: Field) -> HopfAlgebra:
    """The group algebra kG on the group-like basis."""
    m = g.order
    mult = Tensor3.from_entries(
        field,
        (m, m, m),
        [(((i, j, g.mul(i, j))), 1) for i in range(m) for j in range(m)],
    )
    comult = Tensor3.from_entries(
        field, (m, m, m), [(((i, i, i)), 1) for i in range(m)]
    )
    antipode = Matrix(
        field,
        [[1 if i == g.inverse(j) else 0 for j in range(m)] for i in range(m)],
    )
    return HopfAlgebra(
        field,
        mult,
        Vector.basis(field, m, g.identity),
        comult,
        Vector(field, [1] * m),
        antipode,
        name=f"k[{g.name}]" if g.name else "group algebra",
    )


def taft4(field: Field, lam: object) -> tuple[HopfAlgebra, CoidealSubalgebra, LinMap]:
    """The 4-dimensional Taft algebra with its canonical coideal datum.

    Basis (1, g, x, xg) with g*g = 1, x*x = 0, x g = -g x, g group-like
    and x (g, 1)-skew-primitive.  B is the coideal subalgebra spanned by
    1 and x, and the returned map sends 1 -> 1, g -> 1 + lam*x and both
    x, xg -> x; each value of lam gives a different admissible system.
    """
    if field.characteristic == 2:
        raise ValueError("the Taft algebra needs characteristic different from 2")
    lam = field.coerce(lam)
    one = field.one

    entries = []
    # left multiplication by 1 and right multiplication by 1
    for j in range(4):
        entries.append(((0, j, j), one))
        if j:
            entries.append(((j, 0, j), one))
    entries.extend(
        [
            ((1, 1, 0), one),  # g g = 1
            ((1, 2, 3), -one),  # g x = -xg
            ((1, 3, 2), -one),  # g xg = -x
            ((2, 1, 3), one),  # x g = xg
            ((3, 1, 2), one),  # xg g = x
        ]
    )
    mult = Tensor3.from_entries(field, (4, 4, 4), entries)
    comult = Tensor3.from_entries(
        field,
        (4, 4, 4),
        [
            ((0, 0, 0), one),
            ((1, 1, 1), one),
            ((2, 2, 0), one),  # Delta x = x (x) 1 + g (x) x
            ((2, 1, 2), one),
            ((3, 3, 1), one),  # Delta xg = xg (x) g + 1 (x) xg
            ((3, 0, 3), one),
        ],
    )
    counit = Vector(field, [1, 1, 0, 0])
    antipode = Matrix(
        field,
        [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 0, -1],  # S(x) = xg, S(xg) = -x
            [0, 0, 1, 0],
        ],
    )
    h = HopfAlgebra(
        field,
        mult,
        Vector.basis(field, 4, 0),
        comult,
        counit,
        antipode,
        name="taft4",
    )
    report = verify_hopf(h)
    if not report.ok:
        raise CertificationError("taft4-internal", report.failures()[0][0], report)

    iota = LinMap(Matrix(field, [[1, 0], [0, 0], [0, 1], [0, 0]]))
    b = certify_coideal(h, iota)
    zeta = LinMap(Matrix(field, [[1, 1, 0, 0], [0, lam, 1, 1]]))
    return h, b, zeta


class MatchedPair:
    """A matched pair of finite groups (F, G) with mutual actions.

    `act_on_f[x][b]` is x |> b in F and `act_on_g[x][b]` is x <| b in G.
    Construction validates the unit conditions and both compatibility
    laws, then builds the double cross product group on F x G, whose
    associativity is re-checked independently by FiniteGroup.
    """

    def __init__(
        self,
        f: FiniteGroup,
        g: FiniteGroup,
        act_on_f: Sequence[Sequence[int]],
        act_on_g: Sequence[Sequence[int]],
    ):
        self.f = f
        self.g = g
        self.act_on_f = tuple(tuple(row) for row in act_on_f)
        self.act_on_g = tuple(tuple(row) for row in act_on_g)
        nf, ng = f.order, g.order
        if len(self.act_on_f) != ng or any(len(r) != nf for r in self.act_on_f):
            raise ValueError("act_on_f must be a |G| x |F| table")
        if len(self.act_on_g) != ng or any(len(r) != nf for r in self.act_on_g):
            raise ValueError("act_on_g must be a |G| x |F| table")
        ef, eg = f.identity, g.identity
        for b in range(nf):
            if self.act_on_f[eg][b] != b or self.act_on_g[eg][b] != eg:
                raise ValueError("identity of G must act trivially")
        for x in range(ng):
            if self.act_on_f[x][ef] != ef or self.act_on_g[x][ef] != x:
                raise ValueError("identity of F must be fixed")
        for x in range(ng):
            for b in range(nf):
                for c in range(nf):
                    lhs = self.act_on_f[x][f.mul(b, c)]
                    rhs = f.mul(self.act_on_f[x][b], self.act_on_f[self.act_on_g[x][b]][c])
                    if lhs != rhs:
                        raise ValueError(f"action on F incompatible at ({x}, {b}, {c})")
        for x in range(ng):
            for y in range(ng):
                for b in range(nf):
                    lhs = self.act_on_g[g.mul(x, y)][b]
                    rhs = g.mul(self.act_on_g[x][self.act_on_f[y][b]], self.act_on_g[y][b])
                    if lhs != rhs:
                        raise ValueError(f"action on G incompatible at ({x}, {y}, {b})")
        self.group = self.bowtie()

    def bowtie(self) -> FiniteGroup:
        """The double cross product F |><| G on pairs (b, x) at index
        b * |G| + x, with (b, x)(c, y) = (b (x |> c), (x <| c) y)."""
        nf, ng = self.f.order, self.g.order
        size = nf * ng
        table = []
        for i in range(size):
            b, x = divmod(i, ng)
            row = []
            for j in range(size):
                c, y = divmod(j, ng)
                row.append(
                    self.f.mul(b, self.act_on_f[x][c]) * ng
                    + self.g.mul(self.act_on_g[x][c], y)
                )
            table.append(row)
        name = f"{self.f.name}|><|{self.g.name}" if self.f.name and self.g.name else ""
        return FiniteGroup(table, name=name)

    def __repr__(self) -> str:
        return f"MatchedPair(F={self.f!r}, G={self.g!r})"


def s3_pair() -> MatchedPair:
    """C2 and C3 matched so that the double cross product is S3: the
    action on F is trivial and the transposition inverts the 3-cycle."""
    f = cyclic(2)
    g = cyclic(3)
    act_on_f = [[b for b in range(2)] for _ in range(3)]
    act_on_g = [[x if b == 0 else (-x) % 3 for b in range(2)] for x in range(3)]
    return MatchedPair(f, g, act_on_f, act_on_g)


def direct_product_pair(f: FiniteGroup, g: FiniteGroup) -> MatchedPair:
    """Both actions trivial; the double cross product is F x G."""
    act_on_f = [[b for b in range(f.order)] for _ in range(g.order)]
    act_on_g = [[x for _ in range(f.order)] for x in range(g.order)]
    return MatchedPair(f, g, act_on_f, act_on_g)


def matched_pair_hopf(m: MatchedPair, field: Field) -> tuple[HopfAlgebra, CoidealSubalgebra, Pams]:
    """The group algebra of the double cross product with its canonical
    certified system: B = kF along b -> (b, 1), the quotient is kG with
    projection (b, y) -> y and section y -> (1, y), and the retraction
    is the F-component of the reverse factorization, the unique choice
    that is a right B-module map."""
    bow = m.group
    h = group_algebra(bow, field)
    nf, ng = m.f.order, m.g.order
    n = nf * ng
    eg = m.g.identity
    ef = m.f.identity
    iota = LinMap(
        Matrix.from_columns(
            field, [Vector.basis(field, n, b * ng + eg) for b in range(nf)], nrows=n
        )
    )
    bsub = certify_coideal(h, iota)
    one = field.one
    zero = field.zero
    pi = LinMap(
        Matrix(field, [[one if i % ng == y else zero for i in range(n)] for y in range(ng)])
    )
    lift = LinMap(
        Matrix.from_columns(
            field, [Vector.basis(field, n, ef * ng + y) for y in range(ng)], nrows=n
        )
    )
    q = build_quotient(bsub, pi=pi, lift=lift)
    # every (b, y) factors uniquely as (1, y')(c, 1); zeta picks out c
    reverse = {}
    for c in range(nf):
        for y2 in range(ng):
            key = (m.act_on_f[y2][c], m.act_on_g[y2][c])
            if key in reverse:
                raise ValueError("reverse factorization is not unique")
            reverse[key] = c
    zcols = []
    for b in range(nf):
        for y in range(ng):
            zcols.append(Vector.basis(field, nf, reverse[(b, y)]))
    zeta = LinMap(Matrix.from_columns(field, zcols, nrows=nf))
    p = certify_pams(q, zeta)
    return h, bsub, p


def bismash_product(m: MatchedPair, field: Field) -> HopfAlgebra:
    """The bismash product k^G # kF of a matched pair, from the closed
    formulas on the basis p_x # b at index x * |F| + b.  The antipode is
    recovered as the convolution inverse of the identity and the whole
    structure is re-verified on the way out."""
    nf, ng = m.f.order, m.g.order
    n = ng * nf
    one = field.one
    mult_entries = []
    for x in range(ng):
        for b in range(nf):
            for c in range(nf):
                y = m.act_on_g[x][b]
                mult_entries.append(
                    ((x * nf + b, y * nf + c, x * nf + m.f.mul(b, c)), one)
                )
    mult = Tensor3.from_entries(field, (n, n, n), mult_entries)
    comult_entries = []
    for x in range(ng):
        for b in range(nf):
            for y in range(ng):
                left = m.g.mul(x, m.g.inverse(y)) * nf + m.act_on_f[y][b]
                comult_entries.append(((x * nf + b, left, y * nf + b), one))
    comult = Tensor3.from_entries(field, (n, n, n), comult_entries)
    unit = Vector(
        field, [one if i % nf == m.f.identity else field.zero for i in range(n)]
    )
    counit = Vector(
        field, [one if i // nf == m.g.identity else field.zero for i in range(n)]
    )
    from partialdual.hopf import Algebra, Coalgebra

    s = convolution_inverse(
        LinMap.identity(field, n), Coalgebra(field, comult, counit), Algebra(field, mult, unit)
    )
    h = HopfAlgebra(field, mult, unit, comult, counit, s.matrix, name="bismash")
    report = verify_hopf(h)
    if not report.ok:
        raise CertificationError("bismash-internal", report.failures()[0][0], report)
    return h


def pams_from_split_projection(
    h: HopfAlgebra, a: HopfAlgebra, pi: LinMap, gamma: LinMap
) -> Pams:
    """A certified system from a split projection of Hopf algebras.

    `pi`: H -> A and `gamma`: A -> H must be bialgebra maps with
    pi gamma = id (kind "not-hopf-maps" otherwise).  B is carved out as
    the coinvariants of (id (x) pi) Delta, the quotient is identified
    with A along pi, and the retraction is reconstructed through the
    dual side, where gamma transposes into a retraction datum.  Raises
    kind "not-split" when the quotient does not match A.
    """
    field = h.field
    n = h.dim
    na = a.dim
    if pi.matrix.nrows != na or pi.matrix.ncols != n:
        raise CertificationError("not-hopf-maps", "pi has the wrong shape")
    if gamma.matrix.nrows != n or gamma.matrix.ncols != na:
        raise CertificationError("not-hopf-maps", "gamma has the wrong shape")

    def is_bialgebra_map(src: HopfAlgebra, dst: HopfAlgebra, f: LinMap) -> str:
        if f(src.unit) != dst.unit:
            return "unit"
        for i in range(src.dim):
            for j in range(src.dim):
                lhs = f(src.algebra.multiply(src.basis(i), src.basis(j)))
                if lhs != dst.algebra.multiply(f.column(i), f.column(j)):
                    return f"multiplicativity at ({i}, {j})"
        ft = f.matrix.transpose()
        for i in range(src.dim):
            if dst.coalgebra.comultiply(f.column(i)) != f.matrix @ src.coalgebra.comultiply(src.basis(i)) @ ft:
                return f"comultiplicativity at {i}"
        for i in range(src.dim):
            if dst.counit.dot(f.column(i)) != src.counit[i]:
                return f"counit at {i}"
        return ""

    bad = is_bialgebra_map(h, a, pi)
    if bad:
        raise CertificationError("not-hopf-maps", f"pi: {bad}")
    bad = is_bialgebra_map(a, h, gamma)
    if bad:
        raise CertificationError("not-hopf-maps", f"gamma: {bad}")
    if pi.matrix @ gamma.matrix != Matrix.identity(field, na):
        raise CertificationError("not-hopf-maps", "pi gamma is not the identity")

    # coinvariants of (id (x) pi) Delta
    pi_one = pi(h.unit)
    rows = []
    for j in range(n):
        for a2 in range(na):
            row = []
            for mm in range(n):
                acc = field.zero
                for k in range(n):
                    c = h.comult[mm, j, k]
                    if c:
                        acc = acc + c * pi.matrix[a2, k]
                if j == mm:
                    acc = acc - pi_one[a2]
                row.append(acc)
            rows.append(row)
    basis = nullspace(Matrix(field, rows))
    iota = LinMap(
        Matrix.from_columns(field, [basis.row(r) for r in range(basis.nrows)], nrows=n)
    )
    bsub = certify_coideal(h, iota)
    try:
        q = build_quotient(bsub, pi=pi, lift=gamma)
    except CertificationError as e:
        raise CertificationError("not-split", f"{e.kind}: {e.witness}") from e

    # retraction through the dual side
    h2 = biopposite(dual(h))
    b2 = certify_coideal(h2, LinMap(pi.matrix.transpose()))
    q2 = build_quotient(
        b2,
        pi=LinMap(bsub.iota.matrix.transpose()),
        lift=LinMap(_dual_section(q)),
    )
    g2 = gamma_from_zeta(q2, LinMap(gamma.matrix.transpose()))
    zeta = LinMap(g2.matrix.transpose())
    return certify_pams(q, zeta)
