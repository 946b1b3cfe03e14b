"""
hollab - Holomorph Laboratory
=============================

Exact computations around holomorphs of finite abelian p-groups: the twisted
pair multiplication, permutation and matrix models, an explicit free
resolution for Hol(Z/p^r), integer homology by Smith normal form, mod-p
cohomology ranks, Dickson invariants, congruence subgroup towers and wreath
products. Every structural statement the library relies on is re-checked by
`verification_suites`.
"""

VERSION = "1.0.0"
__version__ = VERSION
