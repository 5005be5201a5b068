"""Group construction and subgroup calculus tests."""

import pytest

from fgct import groups as gr
from fgct.errors import (
    InputError,
    InvalidAction,
    NoInverse,
    NonAssociative,
    NotNormal,
    OrderCapExceeded,
)


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


class TestFromCayley:
    def test_trivial(self):
        G = gr.from_cayley([[0]])
        assert G.order == 1 and G.identity == 0

    def test_c2(self):
        G = gr.from_cayley([[0, 1], [1, 0]])
        assert G.order == 2
        assert G.inv == [0, 1]

    def test_nonassociative_detected(self):
        table = cyclic_table(6)
        table[3][4] = 2  # break one entry; 3+4=1 in C6
        # brute-force oracle: find a violating triple first
        def mul(a, b):
            return table[a][b]
        bad = [(a, b, c) for a in range(6) for b in range(6) for c in range(6)
               if mul(mul(a, b), c) != mul(a, mul(b, c))]
        assert bad
        with pytest.raises((NonAssociative, NoInverse, InputError)):
            gr.from_cayley(table)

    def test_bad_shape(self):
        with pytest.raises(InputError):
            gr.from_cayley([[0, 1], [1]])


class TestFromPermutations:
    def test_s3(self):
        G = gr.from_permutations([(1, 2, 0), (1, 0, 2)], 3)
        assert G.order == 6
        assert G.perm_realization is not None

    def test_empty_generators(self):
        G = gr.from_permutations([], 4)
        assert G.order == 1

    def test_d8(self):
        G = gr.from_permutations([(1, 2, 3, 0), (2, 1, 0, 3)], 4)
        assert G.order == 8
        assert gr.fingerprint(G) == gr.fingerprint(gr.dihedral(8))

    def test_cap(self, monkeypatch):
        monkeypatch.setenv("FGCT_ORDER_CAP", "5")
        with pytest.raises(OrderCapExceeded):
            gr.from_permutations([(1, 2, 0), (1, 0, 2)], 3)


class TestCatalog:
    def test_q8(self):
        G = gr.quaternion8()
        assert G.order == 8
        assert len(gr._raw_classes(G)) == 5
        assert sorted(len(c) for c in gr._raw_classes(G)) == [1, 1, 2, 2, 2]

    def test_extraspecial_27(self):
        G = gr.extraspecial(3, "p")
        assert G.order == 27
        assert gr.center(G).order == 3
        assert G.exponent() == 3

    def test_extraspecial_27_exp9(self):
        G = gr.extraspecial(3, "p2")
        assert G.order == 27
        assert gr.center(G).order == 3
        assert G.exponent() == 9

    def test_extraspecial_125(self):
        G = gr.extraspecial(5, "p")
        assert G.order == 125
        assert gr.center(G).order == 5

    def test_cyclic_1(self):
        assert gr.cyclic(1).order == 1

    def test_sl2_3(self):
        G = gr.sl2_3()
        assert G.order == 24
        assert gr.center(G).order == 2

    def test_sym_alt(self):
        assert gr.symmetric(4).order == 24
        assert gr.alternating(4).order == 12

    def test_unknown(self):
        with pytest.raises(Exception):
            gr.from_catalog("monster")


class TestSemidirect:
    def test_trivial_action_is_direct_product(self):
        C2, C3 = gr.cyclic(2), gr.cyclic(3)
        act = gr.GroupAction(C2, C3, ((0, 1, 2), (0, 1, 2)))
        G, en, ea = gr.semidirect_product(act)
        assert G.order == 6
        assert G.is_abelian()
        assert gr.find_isomorphism(G, gr.cyclic(6)) is not None

    def test_c2_inverting_c7_is_d14(self):
        C2, C7 = gr.cyclic(2), gr.cyclic(7)
        inv = tuple((-x) % 7 for x in range(7))
        act = gr.GroupAction(C2, C7, (tuple(range(7)), inv))
        G, en, ea = gr.semidirect_product(act)
        assert G.order == 14
        assert gr.find_isomorphism(G, gr.dihedral(14)) is not None
        # embeddings are homomorphisms, N-image normal, conjugation realizes act
        N = gr.Subgroup(G, en)
        assert gr.is_normal(G, N)
        a = ea[1]
        for x in range(7):
            assert G.conj(en[x], a) == en[inv[x]]

    def test_inversion_mod_center_order_54(self):
        N = gr.extraspecial(3, "p")
        C2 = gr.cyclic(2)
        from fgct.actions import inversion_mod_center
        m = inversion_mod_center(N)
        act = gr.GroupAction(C2, N, (tuple(range(27)), m))
        G, en, ea = gr.semidirect_product(act)
        assert G.order == 54
        fx = gr.fixed_points(act)
        Z = gr.center(N)
        assert fx == Z

    def test_invalid_action(self):
        C2, C4 = gr.cyclic(2), gr.cyclic(4)
        bad = gr.GroupAction(C2, C4, (tuple(range(4)), (0, 2, 1, 3)))
        with pytest.raises(InvalidAction):
            bad.validate()


class TestQuotient:
    def test_q8_mod_center(self):
        G = gr.quaternion8()
        Z = gr.center(G)
        Q, proj, sect = gr.quotient(G, Z)
        assert Q.order == 4
        assert all(Q.element_order(q) in (1, 2) for q in range(4))
        # projection is a surjective homomorphism with kernel Z
        for a in range(G.order):
            for b in range(G.order):
                assert proj[G.mul(a, b)] == Q.mul(proj[a], proj[b])
        assert {g for g in range(G.order) if proj[g] == Q.identity} == set(Z.elements)

    def test_whole_and_trivial(self):
        G = gr.symmetric(3)
        Q, _, _ = gr.quotient(G, gr.whole_group(G))
        assert Q.order == 1
        Q2, _, _ = gr.quotient(G, gr.trivial_subgroup(G))
        assert gr.find_isomorphism(Q2, G) is not None

    def test_not_normal(self):
        G = gr.symmetric(3)
        t = next(g for g in range(6) if G.element_order(g) == 2)
        S = gr.subgroup_closure(G, [t])
        with pytest.raises(NotNormal):
            gr.quotient(G, S)


class TestSubgroupOps:
    def test_centralizer_of_3cycle_in_s3(self):
        G = gr.symmetric(3)
        c3 = next(g for g in range(6) if G.element_order(g) == 3)
        C = gr.centralizer(G, [c3])
        assert C.order == 3

    def test_normalizer_whole(self):
        G = gr.dihedral(8)
        assert gr.normalizer(G, gr.whole_group(G)) == gr.whole_group(G)

    def test_center_extraspecial(self):
        G = gr.extraspecial(3, "p")
        Z = gr.center(G)
        assert Z.order == 3

    def test_commutator_q8(self):
        G = gr.quaternion8()
        D = gr.derived_subgroup(G)
        assert D == gr.center(G)

    def test_commutator_with_action(self):
        C7 = gr.cyclic(7)
        triv = gr.GroupAction(gr.cyclic(1), C7, (tuple(range(7)),))
        assert gr.commutator_with_action(triv).order == 1
        C2 = gr.cyclic(2)
        inv = gr.GroupAction(C2, C7, (tuple(range(7)), tuple((-x) % 7 for x in range(7))))
        assert gr.commutator_with_action(inv).order == 7

    def test_fixed_points(self):
        C7 = gr.cyclic(7)
        C2 = gr.cyclic(2)
        inv = gr.GroupAction(C2, C7, (tuple(range(7)), tuple((-x) % 7 for x in range(7))))
        assert gr.fixed_points(inv).order == 1
        triv = gr.GroupAction(C2, C7, (tuple(range(7)), tuple(range(7))))
        assert gr.fixed_points(triv).order == 7

    def test_sylow(self):
        assert gr.sylow(gr.symmetric(4), 2).order == 8
        assert gr.sylow(gr.cyclic(6), 5).order == 1
        S = gr.sylow(gr.sl2_3(), 2)
        assert S.order == 8
        H, emb, _ = gr.as_group(S)
        assert gr.find_isomorphism(H, gr.quaternion8()) is not None

    def test_normal_subgroups_s4(self):
        G = gr.symmetric(4)
        orders = sorted(N.order for N in gr.all_normal_subgroups(G))
        assert orders == [1, 4, 12, 24]


class TestComplementSearch:
    def test_sl23(self):
        G = gr.sl2_3()
        K = gr.sylow(G, 2)
        Z = gr.center(G)
        assert gr.is_normal(G, K)
        res = gr.complement_search(G, K, Z)
        assert len(res) == 1
        H = res[0]
        assert H.order == 6
        assert gr.intersect(H, K) == Z
        assert len(gr.product_set(G, H, K)) == G.order

    def test_degenerate_k_equals_l(self):
        G = gr.symmetric(3)
        K = gr.subgroup_closure(G, [next(g for g in range(6) if G.element_order(g) == 3)])
        res = gr.complement_search(G, K, K)
        assert res == [gr.whole_group(G)]

    def test_c4_no_complement(self):
        G = gr.cyclic(4)
        K = gr.Subgroup(G, (0, 2))
        L = gr.trivial_subgroup(G)
        assert gr.complement_search(G, K, L) == []


class TestChiefFactors:
    def test_v4_chief_in_sl23(self):
        G = gr.sl2_3()
        K = gr.sylow(G, 2)
        Z = gr.center(G)
        assert gr.is_chief_factor(G, K, Z)

    def test_c3xc3_not_chief_under_inversion(self):
        from fgct.actions import inversion_mod_center
        N = gr.extraspecial(3, "p")
        C2 = gr.cyclic(2)
        act = gr.GroupAction(C2, N, (tuple(range(27)), inversion_mod_center(N)))
        G, en, _ = gr.semidirect_product(act)
        K = gr.Subgroup(G, en)
        Z = gr.subgroup_closure(G, [en[x] for x in gr.center(N).elements])
        assert not gr.is_chief_factor(G, K, Z)
        mins = gr.minimal_normal_overgroups(G, Z, K)
        assert all(m.order == 9 for m in mins)
        assert len(mins) == 4
