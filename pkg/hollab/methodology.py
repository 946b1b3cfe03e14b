"""
hollab - Methodology & Claims Module
====================================

Every statement the verification suites check, with the anchor string that
appears in reports, and the computational methods behind them.

IMPORTANT: This file is displayed in the dashboard and quoted in reports.
"""

from dataclasses import dataclass, field
from typing import Dict, List

from .reference_data import Provenance, SUITE_NAMES


@dataclass(frozen=True)
class Claim:
    """A single checked statement."""
    id: str
    anchor: str
    statement: str
    provenance: Provenance
    module: str
    suite: str


@dataclass
class ComputationMethod:
    """How a family of results is computed."""
    name: str
    formula: str
    description: str
    inputs: List[str]
    limitations: List[str] = field(default_factory=list)


def _claims(suite: str, module: str, rows) -> Dict[str, Claim]:
    return {cid: Claim(cid, anchor, statement, prov, module, suite) for cid, anchor, statement, prov in rows}


P, D, T = Provenance.STATED, Provenance.DERIVED, Provenance.TRIVIAL


# =============================================================================
# CHECKED CLAIMS
# =============================================================================

CLAIMS: Dict[str, Claim] = {}

CLAIMS.update(_claims("holomorph-basics", "holomorph_core", [
    ("HB-01", "holomorph order |K| |Aut K|",
     "|Hol(Z/3)| = 6 and nonabelian, |Hol(Z/4)| = 8, |Hol(Z/2 + Z/2)| = 24", P),
    ("HB-02", "holomorph fills Sym(K)",
     "Hol(K) = Sym(K) exactly for K in {0, Z/2, Z/3, Z/2 + Z/2} among |K| <= 9", P),
    ("HB-03", "pair product is a group law",
     "associativity, identity and inverses of (f,x)(g,y) = (fg, g^-1 x + y)", T),
    ("HB-04", "automorphisms act on translations by conjugation",
     "(f,0)(1,y)(f,0)^-1 = (1, f(y))", P),
    ("HB-05", "Cayley embedding of the holomorph",
     "Hol(K) embeds in Sym(K) with the translations normal", P),
    ("HB-06", "split extensions map to the holomorph",
     "K x| H -> Hol(K), (h, x) -> (phi(h), x) is a homomorphism restricting to the identity on K", P),
    ("HB-07", "compatible pairs induce holomorph maps",
     "reduction Z/8 -> Z/4 induces Hol(Z/8) -> Hol(Z/4); the sign map of Hol(Z/3) is not induced", P),
    ("HB-08", "holomorph acts on the group ring basis",
     "(f,x)(m) = f(x + m) is an action of Hol(K) on K", P),
    ("HB-09", "matrix form is multiplicative",
     "row and column matrix forms multiply like pairs for (n,m) in {(2,2),(2,4),(2,3)}", P),
    ("HB-10", "matrix image is the e1 stabilizer",
     "the row form is injective onto matrices with first column e1", P),
    ("HB-11", "holomorph is maximal in GL",
     "Hol(Z/2 + Z/2) is a maximal subgroup of GL(3, Z/2)", P),
    ("HB-12", "Sylow orders of holomorph and GL",
     "p-parts of |Hol((Z/p)^n)| and |GL(n+1, Z/p)| agree; they differ over Z/p^2", P),
    ("HB-13", "unitriangular Sylow subgroup",
     "upper unitriangular matrices are a Sylow subgroup inside the holomorph with a normal filtration", P),
    ("HB-14", "congruence Sylow subgroup of GL(n, Z/p^r)",
     "diagonal 1 and lower part 0 mod p give a subgroup of order the p-part of |GL|", P),
]))

CLAIMS.update(_claims("resolution-acyclicity", "group_ring_resolution", [
    ("RA-01", "generalised resolution is a complex",
     "d o d = 0 through total degree 8 for (8,2,2,3,7)", P),
    ("RA-02", "generalised resolution is a complex",
     "d o d = 0 through total degree 8 for (16,4,2,3,15)", P),
    ("RA-03", "generalised resolution is a complex",
     "d o d = 0 through total degree 8 for (32,8,2,3,31)", P),
    ("RA-04", "wall and plane identities",
     "d0 d1 + d1 d0 = 0 and d0 d2 + d1 d1 + d2 d0 = 0 in each plane", P),
    ("RA-05", "augmentation of coefficients",
     "closed-form augmentations equal coefficient sums of the ring elements", D),
    ("RA-06", "presentation of the holomorph",
     "the metabelian relators hold in Hol(Z/p^r) for the supported grid", P),
    ("RA-07", "resolution for odd primes",
     "d o d = 0 for the presentation of Hol(Z/9) with s2 = 1", P),
]))

CLAIMS.update(_claims("homology-tables", "homology_engine", [
    ("HT-01", "integral homology of Hol(Z/2^r)",
     "computed homology matches the closed form for the p = 2 grid", P),
    ("HT-02", "integral homology of Hol(Z/p^r), p odd",
     "computed homology matches the closed form for the p = 3 grid", P),
    ("HT-03", "first homology is the abelianization",
     "H_1 from the resolution equals the abelianized presentation; H_1(Hol(Z/8)) = (Z/2)^3", D),
    ("HT-04", "third homology of Hol(Z/3) = S_3",
     "H_3(Hol(Z/3)) = Z/6", P),
    ("HT-05", "homology of complexes of cyclic groups",
     "homology of Z/p^r complexes depends only on multiplier valuations", P),
]))

CLAIMS.update(_claims("cohomology-ranks", "homology_engine", [
    ("CR-01", "mod-2 ranks from integral homology",
     "universal coefficients on computed homology give the mod-2 rank formula", P),
    ("CR-02", "mod-p ranks from integral homology",
     "universal coefficients on computed homology give the mod-3 rank formula", P),
    ("CR-03", "mod-2 ranks do not depend on r",
     "ranks 1, 3, 5, 7 in degrees 0..3 and equal rank sequences for r = 3, 4, 5", P),
]))

CLAIMS.update(_claims("ring-hilbert", "graded_invariants", [
    ("RH-01", "cohomology ring of Hol(Z/2^r), r > 3",
     "Hilbert series of the presentation, with the terms invisible to both detecting "
     "subgroups restored, equals the mod-2 rank formula through degree 16", D),
    ("RH-02", "cohomology ring of Hol(Z/8)",
     "Hilbert series of the r = 3 presentation, with the same restored terms, equals the mod-2 rank formula", D),
    ("RH-03", "cohomology ring of Hol(Z/p^r), p odd",
     "Hilbert series equals the mod-p rank formula for p in {3, 5}", P),
    ("RH-04", "continuous cohomology of the limit",
     "Lambda(x) (x) F_2[u,y]/(u^2 = ux + uy) has series (1+t)^2/(1-t)", P),
]))

CLAIMS.update(_claims("dickson-noncollapse", "graded_invariants", [
    ("DN-01", "Dickson coefficient is GL-invariant",
     "the coefficient of t in prod (t + c.v) is invariant under GL(n, F_p)", P),
    ("DN-02", "spectral sequence does not collapse",
     "d2 of the Dickson coefficient is nonzero in every applicable mode", P),
    ("DN-03", "bidegree of the first nonzero differential",
     "d2 of the Dickson coefficient lands in bidegree (2, 2p^n - 3)", D),
]))

CLAIMS.update(_claims("congruence-tower", "congruence_lie", [
    ("CT-01", "order of the congruence subgroup",
     "|Gamma_{n,k}| = p^{k(n^2+n)} by enumeration and from |GL|", P),
    ("CT-02", "congruence subgroup is closed",
     "Gamma_{n,k} is closed under products and inverses", T),
    ("CT-03", "elements of order p form the central kernel",
     "Omega_1(Gamma_{n,k}) = Ker(Gamma_{n,k} -> Gamma_{n,k-1}) and is central", P),
    ("CT-04", "p-th power map along the tower",
     "lifting and raising to the p-th power is a bijection Omega_1 -> Omega_1", P),
    ("CT-05", "Lie bracket from commutators",
     "[(A,x),(B,y)] = (AB - BA, Ay - Bx) is read off group commutators", P),
    ("CT-06", "structure constants of the Lie algebra",
     "the delta formulas reproduce the bracket on basis elements", P),
    ("CT-07", "Jacobi identity", "the bracket satisfies Jacobi on random triples", T),
    ("CT-08", "p-th roots of unipotent elements",
     "(1 + pb)^p = 1 + p^2 a and the two 2-adic variants are solvable for every a", P),
    ("CT-09", "almost powerful embedding",
     "[G, N] lies in N^p, and for p = 2 also [N, N] in N^4", P),
]))

CLAIMS.update(_claims("bockstein", "congruence_lie", [
    ("BK-01", "Bockstein squares to zero",
     "beta o beta = 0 on every generator for n <= 3, p in {2, 3, 5}", P),
    ("BK-02", "Bockstein from structure constants",
     "explicit images agree with the structure-constant formula", P),
]))

CLAIMS.update(_claims("wreath-permutative", "wreath_permutative", [
    ("WP-01", "wreath multiplication",
     "((12),(1,2))((12),(0,1)) = (id,(2,2)) in S_2 wr Z/3", D),
    ("WP-02", "wreath product acts on tuples", "the product acts as composition on G^q", D),
    ("WP-03", "embedding into Aut(G^q)", "embed_i is an injective homomorphism", P),
    ("WP-04", "embedding into Hol(G^q)", "embed_j is an injective homomorphism", P),
    ("WP-05", "orders of the embedded wreath products",
     "S_2 wr Hol(Z/2) has image 8 in Hol((Z/2)^2); S_2 wr Aut(Z/3) has image 8 in GL(2, Z/3)", D),
    ("WP-06", "wreath product as a pullback",
     "P wr G is the pullback of P -> Aut(G^q) <- Hol(G^q)", P),
    ("WP-07", "base inclusion", "embed_j restricted to the base is x -> (1, x)", P),
    ("WP-08", "double wreath compatibility",
     "S_q wr S_n wr Hol(G) -> Hol(G^{qn}) agrees computed stepwise or flattened", P),
    ("WP-09", "permutative categories",
     "axioms of a permutative category and naturality for Aut(G^n), Hol(G^n) and Hol(R) matrices", P),
    ("WP-10", "symmetry of the matrix category",
     "c(1,1) over Z/2 is [[1,0,0],[0,0,1],[0,1,0]] and squares to 1", P),
    ("WP-11", "hexagon axiom on points",
     "(c(p,m) [] 1_n) c(m+n,p) = 1_m [] c(n,p) as maps of (Z/3)^3", D),
]))

CLAIMS.update(_claims("number-theory-lemmas", "modular_linalg", [
    ("NT-01", "2-adic valuation of 3^m - 1",
     "nu_2(3^m - 1) is 1 for m odd and nu_2(m) + 2 for m even, m <= 1024", P),
    ("NT-02", "p-adic valuation of s^m - 1",
     "nu_p(s^{(p-1)p^{q-1}k} - 1) = q for (k, p) = 1, p in {3, 5}, r <= 5", P),
    ("NT-03", "powers of 3 modulo 2^r", "3^{2^{r-3}} = 1 + 2^{r-1} mod 2^r for 4 <= r <= 10", P),
    ("NT-04", "generators of Aut(Z/2^r)",
     "Aut(Z/2^r) = <3> x <-1> with orders 2^{r-2} and 2 for 3 <= r <= 10", P),
    ("NT-05", "reduction of units is onto", "Aut(Z/p^r) -> Aut(Z/p^q) is surjective for q < r", P),
    ("NT-06", "Wilson's theorem", "the product of the units mod p is -1 for primes p <= 97", P),
    ("NT-07", "valuations over Aut(Z/p^r)",
     "nu_p(s^m - 1) and nu_p of the norm sum follow the three-case split on m", P),
]))


def claims_for_suite(suite: str) -> List[Claim]:
    if suite not in SUITE_NAMES:
        raise KeyError(suite)
    return sorted((c for c in CLAIMS.values() if c.suite == suite), key=lambda c: c.id)


def get_anchor(claim_id: str) -> str:
    return CLAIMS[claim_id].anchor


# =============================================================================
# COMPUTATION METHODS
# =============================================================================

COMPUTATION_METHODS: Dict[str, ComputationMethod] = {
    "integral_homology": ComputationMethod(
        name="Integral homology of Hol(Z/p^r)",
        formula="H_q = sum_m H_q(Z (x)_G A^m), A^m from the generalised resolution",
        description="Build the two-generator resolution over Z[G], tensor with Z summand by summand "
                    "and read homology off Smith normal forms",
        inputs=["p", "r", "qmax"],
        limitations=[
            "Degrees up to 12",
            "The d2 x-plane exponent defaults to m*s1",
        ],
    ),
    "closed_form_homology": ComputationMethod(
        name="Closed-form homology tables",
        formula="H_q = Z/2^{n_1} + ... + Z/p^r^{n_r} (+ Z/(p-1) in odd degrees, p odd)",
        description="Multiplicities n_i as floor and congruence expressions in q",
        inputs=["p", "r", "q"],
        limitations=["p = 2 needs r >= 3"],
    ),
    "mod_p_ranks": ComputationMethod(
        name="Mod-p cohomology ranks",
        formula="dim H^q = free_q + rank_p H_q + rank_p H_{q-1}",
        description="Universal coefficients on integral homology, compared with quasi-polynomial "
                    "rank formulas",
        inputs=["p", "r", "q"],
        limitations=["Odd p needs r >= 3"],
    ),
    "hilbert_series": ComputationMethod(
        name="Hilbert series of ring presentations",
        formula="dim R_d = #monomials_d - dim I_d",
        description="Exact rank of the degree-d part of the relation ideal over F_p",
        inputs=["presentation", "max_degree"],
        limitations=["Degrees up to 16 by default"],
    ),
    "dickson_noncollapse": ComputationMethod(
        name="Non-collapse witness",
        formula="d2(c_1(v)) with d2(v_i) = u_i z_i (u_i x_i^2 when r = 3)",
        description="Dickson coefficient by polynomial multiplication over GF(p) and d2 as a derivation",
        inputs=["n", "p", "mode"],
        limitations=["GL invariance is exhaustive, so only small n and p"],
    ),
    "congruence_tower": ComputationMethod(
        name="Congruence subgroups and their Lie algebra",
        formula="[(A,x),(B,y)] = (AB - BA, Ay - Bx)",
        description="Exhaustive enumeration of Gamma_{n,k} with batched numpy arithmetic",
        inputs=["n", "k", "p"],
        limitations=["Bockstein formulas for p in {2, 3} are extended from p >= 5"],
    ),
    "permutative_categories": ComputationMethod(
        name="Permutative category axioms",
        formula="c(m,n) swaps blocks; m [] n = m + n",
        description="Axioms checked on whole hom-sets when small, otherwise on seeded samples",
        inputs=["category", "m", "n", "p"],
        limitations=["Objects up to 3 and |G| <= 4"],
    ),
}
