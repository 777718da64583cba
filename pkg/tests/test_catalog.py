import itertools
from fractions import Fraction

import pytest

from cudim import catalog
from cudim.core import FiniteCuPresentation
from cudim.dimension import dim_zero_exact
from cudim.symbolic import SymbolicSemigroup
from cudim.values import INF

from conftest import ek_tables, nbar_prime_tables

C = lambda n: ("c", n)
S = lambda q: ("s", Fraction(q))
SINF = ("s", INF)


def test_elementary_tables_match_direct_construction():
    for k in range(6):
        P = catalog.elementary(k)
        n, add, leq, names = ek_tables(k)
        assert P.size == n == k + 2
        assert list(P.add_table) == [v for row in add for v in row]
        assert list(P.leq_table) == [v for row in leq for v in row]
        assert list(P.names) == names


def test_make_e5():
    P = catalog.make("E(5)")
    assert P.size == 7
    assert P.names == ("0", "1", "2", "3", "4", "5", "inf")


def test_hom_elementary_carriers():
    H = catalog.make("HomE(2,5)")
    assert H.names == ("0", "2", "3", "4", "5", "inf")
    # r = ceil((l+1)/(k+1))
    assert catalog.hom_elementary(1, 5).names == ("0", "3", "4", "5", "inf")
    # l <= k collapses to E_l
    E3 = catalog.elementary(3)
    H2 = catalog.hom_elementary(5, 3)
    assert H2.names == E3.names
    assert H2.add_table == E3.add_table and H2.leq_table == E3.leq_table


def test_nbar_prime_truncation_matches_independent_tables():
    for cap in (2, 3, 4):
        P = catalog.nbar_prime_truncated(cap)
        n, add, leq, names = nbar_prime_tables(cap)
        assert P.size == n
        assert list(P.add_table) == [v for row in add for v in row]
        assert list(P.leq_table) == [v for row in leq for v in row]
        assert list(P.names) == names


def test_nbar_prime_addition_facts():
    NP = catalog.nbar_prime()
    p = ("p",)
    assert NP.add(p, p) == C(2)
    assert NP.add(p, C(1)) == C(2)
    for k in range(1, 5):
        assert NP.add(p, C(k)) == NP.add(C(1), C(k))
    assert NP.add(p, C(0)) == p
    assert not NP.leq(p, C(1)) and not NP.leq(C(1), p)


def test_jiang_su_encoding_consistency():
    Z = catalog.jiang_su()
    qs = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(3, 2), INF]
    for n, m in itertools.product(range(4), repeat=2):
        assert Z.add(C(n), C(m)) == C(n + m)
        assert Z.leq(C(n), C(m)) == (n <= m)
        assert Z.way_below(C(n), C(m)) == (n <= m)
    for n in range(4):
        for q in qs:
            if q is not INF:
                assert Z.add(C(n), S(q)) == S(n + q)
            assert Z.leq(C(n), ("s", q)) == (q is INF or n < q)
            assert Z.leq(("s", q), C(n)) == (q is not INF and q <= n)
            # compacts absorb way-below on either side
            assert Z.way_below(C(n), ("s", q)) == Z.leq(C(n), ("s", q))
            assert Z.way_below(("s", q), C(n)) == Z.leq(("s", q), C(n))
    for q, p in itertools.product(qs, repeat=2):
        if q is not INF and p is not INF:
            assert Z.add(("s", q), ("s", p)) == S(q + p)
            assert Z.leq(("s", q), ("s", p)) == (q <= p)
            assert Z.way_below(("s", q), ("s", p)) == (q < p)
    assert Z.way_below(SINF, SINF) is False
    assert Z.add(S(1), SINF) == SINF


def test_half_line_way_below():
    H = catalog.half_line()
    assert H.way_below(S(0), S(0))  # zero is compact
    assert H.way_below(S("1/2"), S("3/4"))
    assert not H.way_below(S("3/4"), S("3/4"))
    assert not H.way_below(SINF, SINF)
    assert H.way_below(S(2), SINF)


def test_z_prime_unit_facts():
    ZP = catalog.jiang_su_prime()
    u = ("p",)
    assert ZP.add(u, u) == C(2)
    assert ZP.add(u, S("1/2")) == S("3/2")
    assert not ZP.leq(u, C(1)) and not ZP.leq(C(1), u)
    assert ZP.leq(u, C(2)) and ZP.leq(u, S("3/2"))
    assert ZP.leq(S(1), u) and not ZP.leq(S("5/4"), u)
    assert ZP.fmt(u) == "1''"


def test_z_prime_dimension_instance():
    # chosen lower-bound instance on the adjoined unit: no zero-level
    # witness for 1'' << 1'' << C(1) + C(1), but a one-level witness
    from cudim.dimension import check_witness, find_witness, make_instance
    from cudim.symbolic import basis_closure

    ZP = catalog.jiang_su_prime()
    inst = make_instance(ZP, ("p",), ("p",), [C(1), C(1)])
    space = basis_closure(ZP, 3, 1)
    assert find_witness(ZP, inst, 0, space, "strict") is None
    wit = find_witness(ZP, inst, 1, space, "strict")
    assert wit is not None and check_witness(ZP, inst, wit, "strict")


def test_bivariant_corner_case_is_zero_dimensional():
    # at (k, l) = (1, 2) the carrier {0, 2, inf} is isomorphic to E_1,
    # so zero-dimensionality holds even though l > k; the usual
    # obstruction instance needs r + 1 <= l
    H = catalog.hom_elementary(1, 2)
    assert H.names == ("0", "2", "inf")
    assert dim_zero_exact(H).holds


def test_named_space_and_lsc_keys():
    P = catalog.make("LscFin(point,2)")
    E2 = catalog.elementary(2)
    assert P.add_table == E2.add_table
    strict = catalog.make("LscFinStrict(sierpinski,2)")
    assert strict.size == 7
    with pytest.raises(ValueError):
        catalog.named_space("moebius")


def test_make_parser_nested_and_errors():
    D = catalog.make("DirectSumOf(E(1),E(1))")
    assert isinstance(D, FiniteCuPresentation) and D.size == 9
    L = catalog.make("ChainLimitOf(doubling,3)")
    assert isinstance(L, SymbolicSemigroup)
    with pytest.raises(ValueError):
        catalog.make("Frobnicate(3)")
    with pytest.raises(ValueError):
        catalog.make("E(1,2)")


def test_default_entries_shape():
    entries = catalog.default_entries()
    names = [e.name for e in entries]
    assert "NbarPrime" in names
    assert any(n.startswith("Lsc(sierpinski,2,strict") for n in names)
    assert all(isinstance(e, (FiniteCuPresentation, SymbolicSemigroup))
               for e in entries)
