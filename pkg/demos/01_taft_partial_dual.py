"""
Partial dualization of the 4-dimensional Taft algebra
=====================================================

H is generated by a group-like g and a skew-primitive x with g*g = 1,
x*x = 0, xg = -gx.  B = span(1, x) is a left coideal subalgebra, and for
every scalar lam the map zeta(1) = 1, zeta(g) = 1 + lam*x, zeta(x) = x
is a certified cointegral, so each lam yields its own mapping system and
its own partial dual on the 4-dimensional carrier (H/B+H)* # B.
"""

from partialdual.coideal import build_quotient
from partialdual.examples import taft4
from partialdual.linalg import QQ, PrimeField, Vector
from partialdual.pams import certify_pams
from partialdual.partial_dual import detect_hopf, left_partial_dual

for field, lam in [(QQ, 0), (QQ, 1), (QQ, -1), (PrimeField(5), 3)]:
    h, b, zeta = taft4(field, lam)
    q = build_quotient(b)          # H / B+H is 2-dimensional, spanned by 1bar and gbar
    p = certify_pams(q, zeta)      # raises on the first failed identity
    qh = left_partial_dual(p)

    # the carrier basis is (f0#1, f0#x, f1#1, f1#x); name the four
    # distinguished elements of the dual the way one names them by hand
    e = qh.algebra.unit
    f = Vector(field, [1, 0, -1, 0])
    x = Vector(field, [0, 1, 0, 1])

    print(f"lam = {lam} over {field.descriptor}")
    print("  f*f == 1:", qh.multiply(f, f) == e)
    print("  x*x == 0:", qh.multiply(x, x).is_zero())
    print("  x*f == -f*x:", qh.multiply(x, f) == qh.multiply(f, x).scale(field.coerce(-1)))
    print("  Delta(x):", qh.comultiply(x))
    print("  associator trivial:", detect_hopf(qh).kind == "hopf")
    print("  checks run:", len(qh.report.checks))
print()
print("Every identity above was certified exactly, no floating point anywhere.")
