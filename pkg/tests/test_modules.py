"""Presented modules: constructors, minimize, kernel, tensor, dual,
transpose, biduality, pushforward, Fitting ideals, local rank."""

import pytest

from reflextor.groebner import FreeVector, buchberger, normal_form
from reflextor.modules import (
    DegreeError,
    ModuleMap,
    NotTorsionless,
    NotWellDefined,
    PresentedModule,
    biduality,
    cyclic,
    dual,
    fitting_ideal,
    free_module,
    identity_map,
    kernel,
    localized_rank,
    minimize,
    module_from_rows,
    module_is_zero,
    pushforward,
    syzygy,
    tensor,
    transpose,
)
from reflextor.rings import RIdeal


class TestConstruction:
    def test_cyclic_shape(self, ring_a, n_a):
        assert n_a.num_generators == 1
        assert n_a.num_relations == 1
        assert n_a.matrix_strings() == [["x"]]

    def test_cyclic_zero_ideal_is_free(self, ring_a):
        free = cyclic(ring_a, ())
        assert free.num_relations == 0

    def test_entries_are_reduced_and_zero_columns_dropped(self, ring_a, pa):
        m = module_from_rows(ring_a, [[pa("x*y"), pa("z")]], (0,))
        assert m.num_relations == 1
        assert m.matrix_strings() == [["z"]]

    def test_degree_consistency_enforced(self, ring_a, pa):
        with pytest.raises(ValueError):
            module_from_rows(ring_a, [[pa("x + x^2")]], (0,))

    def test_transpose_of_cyclic(self, m_a):
        assert m_a.num_generators == 3
        assert m_a.num_relations == 1
        assert sorted(s[0] for s in m_a.matrix_strings()) == ["w", "y", "z"]

    def test_transpose_of_free_is_zero(self, ring_a):
        assert transpose(free_module(ring_a, (0, 1))).num_generators == 0

    def test_double_transpose_stable(self, ring_a, m_a):
        tt = transpose(transpose(m_a))
        diff = tt.hilbert_series() - m_a.hilbert_series()
        ring_numer = free_module(ring_a, (0,)).hilbert_series().as_dict()
        assert diff.is_free_combination_of(ring_numer) is not None


class TestMinimize:
    def test_unit_presentation_collapses(self, ring_a, pa):
        z = minimize(cyclic(ring_a, (pa("1"),)))
        assert z.num_generators == 0
        assert module_is_zero(z)

    def test_block_diagonal_unit(self, ring_a, pa):
        m = module_from_rows(
            ring_a,
            [[pa("1"), pa("0")], [pa("0"), pa("x")]],
            (0, 0),
        )
        mm = minimize(m)
        assert mm.num_generators == 1
        assert mm.matrix_strings() == [["x"]]

    def test_redundant_column_dropped(self, ring_b, pb):
        m = module_from_rows(ring_b, [[pb("x"), pb("x^2")]], (0,))
        mm = minimize(m)
        assert mm.matrix_strings() == [["x"]]

    def test_idempotent(self, ring_a, m_a, n_a, tensor_a):
        for m in (m_a, n_a, tensor_a):
            once = minimize(m)
            assert minimize(once) == once

    def test_already_minimal_presentation_kept(self, ring_a, pa):
        rows = [[pa("x"), pa("0"), pa("0")],
                [pa("0"), pa("x"), pa("0")],
                [pa("0"), pa("0"), pa("x")],
                [pa("w"), pa("y"), pa("z")]]
        c = module_from_rows(ring_a, rows, (0, 0, 0, 0))
        assert minimize(c).num_generators == 4
        assert minimize(c).num_relations == 3


class TestTensor:
    def test_shape_and_paper_matrix(self, ring_a, m_a, n_a, tensor_a, pa):
        assert tensor_a.num_generators == 3
        assert tensor_a.num_relations == 4
        from reflextor.isomorphism import presentations_equivalent_up_to_permutation

        displayed = module_from_rows(
            ring_a,
            [[pa("x"), pa("0"), pa("0"), pa("w")],
             [pa("0"), pa("x"), pa("0"), pa("y")],
             [pa("0"), pa("0"), pa("x"), pa("z")]],
            (-1, -1, -1),
        )
        assert presentations_equivalent_up_to_permutation(tensor_a, displayed)

    def test_tensor_with_ring_is_identity(self, ring_a, m_a):
        from reflextor.isomorphism import find_graded_isomorphism

        t = minimize(tensor(m_a, free_module(ring_a, (0,))))
        assert t.hilbert_series() == m_a.hilbert_series()
        assert find_graded_isomorphism(t, m_a) is not None

    def test_small_fixture_tensor_collapses(self, ring_b, m_b, n_b):
        from reflextor.isomorphism import find_graded_isomorphism

        t = minimize(tensor(m_b, n_b))
        iso = find_graded_isomorphism(t, m_b)
        assert iso is not None and iso.shift == 0

    def test_ring_mismatch(self, ring_a, ring_b, m_a, m_b):
        with pytest.raises(ValueError):
            tensor(m_a, m_b)

    def test_commutative_hilbert(self, ring_a, m_a, n_a, tensor_a):
        assert (tensor(n_a, m_a).hilbert_series()
                == tensor(m_a, n_a).hilbert_series())

    def test_associative_hilbert(self, ring_a, m_a, n_a):
        left = tensor(tensor(m_a, n_a), n_a).hilbert_series()
        right = tensor(m_a, tensor(n_a, n_a)).hilbert_series()
        assert left == right


class TestKernelAndMaps:
    def test_kernel_of_multiplication(self, ring_a, pa):
        # ker(R --x--> R) = ann(x) = (y)
        source = free_module(ring_a, (1,))
        target = free_module(ring_a, (0,))
        phi = ModuleMap(source, target, (FreeVector(ring_a.sig, (pa("x"),)),))
        ker, incl = kernel(phi)
        assert ker.num_generators == 1
        assert [str(p) for p in incl.columns[0].coords] == ["y"]

    def test_kernel_of_identity_is_zero(self, ring_a, n_a):
        ker, _ = kernel(identity_map(n_a))
        assert module_is_zero(ker)

    def test_kernel_of_map_to_zero_is_everything(self, ring_a):
        source = free_module(ring_a, (0,))
        zero = PresentedModule(ring_a, (), ())
        phi = ModuleMap(source, zero, (FreeVector(ring_a.sig, ()),))
        ker, _ = kernel(phi)
        assert ker.hilbert_series() == source.hilbert_series()

    def test_ill_defined_map_rejected(self, ring_a, pa, n_a):
        # sending the generator of R/(x) to 1 in R is not well defined
        target = free_module(ring_a, (0,))
        with pytest.raises(NotWellDefined):
            ModuleMap(n_a, target, (FreeVector(ring_a.sig, (pa("1"),)),))

    def test_degree_zero_enforced(self, ring_a, pa, n_a):
        target = free_module(ring_a, (0,))
        with pytest.raises(DegreeError):
            ModuleMap(n_a, target, (FreeVector(ring_a.sig, (pa("z"),)),))


class TestDual:
    def test_dual_of_free(self, ring_a):
        d = dual(free_module(ring_a, (0, 0)))
        assert minimize(d).num_generators == 2
        assert minimize(d).num_relations == 0

    def test_dual_of_cyclic_is_annihilator(self, ring_a, n_a):
        # Hom(R/(x), R) = (0 : x) = (y), a shifted copy of R/(x)
        d = minimize(dual(n_a))
        assert d.num_generators == 1
        assert d.matrix_strings() == [["x"]]
        assert d.gen_degrees == (1,)
        # degree-by-degree check against the shifted polynomial ring
        assert d.hilbert_series().values(0, 5) == [0, 1, 3, 6, 10, 15]

    def test_dual_of_zero(self, ring_a):
        z = PresentedModule(ring_a, (), ())
        assert module_is_zero(dual(z))


class TestBiduality:
    def test_free_is_reflexive(self, ring_a):
        rep = biduality(free_module(ring_a, (0, 2)))
        assert rep.torsionless and rep.reflexive

    def test_main_fixture_torsionless_not_reflexive(self, m_a):
        rep = biduality(m_a)
        assert rep.torsionless
        assert not rep.reflexive
        assert rep.cokernel.num_generators > 0

    def test_small_fixture_partner_has_kernel(self, n_b):
        rep = biduality(n_b)
        assert not rep.torsionless
        assert rep.kernel.num_generators > 0

    def test_kernel_matches_ext_criterion(self, ring_a, m_a, n_a, tensor_a, n_b):
        from reflextor.homology import ext

        for module in (m_a, n_a, tensor_a, n_b):
            ring = module.ring
            rep = biduality(module)
            e1 = ext(transpose(module), free_module(ring, (0,)), 1,
                     want_module=False)
            assert rep.torsionless == e1.is_zero


class TestPushforward:
    def test_free_module(self, ring_a):
        res = pushforward(free_module(ring_a, (0,)))
        assert module_is_zero(res.module)
        assert res.target_free.num_generators == 1

    def test_fixture_partner(self, ring_a, n_a):
        res = pushforward(n_a)
        assert res.ext1_certificate.is_zero
        assert res.module.num_generators == 1

    def test_non_torsionless_rejected_with_witness(self, n_b):
        with pytest.raises(NotTorsionless) as err:
            pushforward(n_b)
        assert err.value.witness is not None
        assert not err.value.witness.is_zero

    def test_embedding_is_injective(self, ring_a, n_a):
        res = pushforward(n_a)
        ker, _ = kernel(res.embedding)
        assert module_is_zero(ker)

    def test_stable_syzygy_identity_recorded(self, ring_a, n_a):
        # Omega(Tr N) agrees with Tr(N1) up to free summands: the series
        # difference divides by the ring's series with an integer quotient
        res = pushforward(n_a)
        assert res.stable_syzygy_identity is not None


class TestFittingIdeals:
    def test_cyclic_fitt0_is_the_ideal(self, ring_a, pa, n_a):
        f0 = fitting_ideal(n_a, 0)
        gb = buchberger(list(f0.generators))
        assert normal_form(pa("x"), gb).is_zero

    def test_main_fixture_chain(self, m_a, pa):
        assert fitting_ideal(m_a, 0).generators == ()
        assert fitting_ideal(m_a, 1).generators == ()
        f2 = fitting_ideal(m_a, 2)
        assert {str(g) for g in f2.generators} == {"y", "z", "w"}
        f3 = fitting_ideal(m_a, 3)
        assert [str(g) for g in f3.generators] == ["1"]

    def test_fitting_at_generator_count_is_unit(self, ring_a, n_a, m_a):
        for m in (n_a, m_a):
            f = fitting_ideal(m, m.num_generators)
            assert [str(g) for g in f.generators] == ["1"]

    def test_zero_module_fitting(self, ring_a):
        z = PresentedModule(ring_a, (), ())
        assert [str(g) for g in fitting_ideal(z, 0).generators] == ["1"]


class TestLocalizedRank:
    def test_fixture_partner_at_minimal_primes(self, ring_a, pa, n_a):
        px = RIdeal(ring_a, (pa("x"),), prime_status="verified")
        py = RIdeal(ring_a, (pa("y"),), prime_status="verified")
        assert localized_rank(n_a, px).rank == 1
        assert localized_rank(n_a, py).rank == 0

    def test_fixture_partner_at_height_one(self, ring_a, pa, n_a):
        pxy = RIdeal(ring_a, (pa("x"), pa("y")), prime_status="verified")
        assert localized_rank(n_a, pxy).kind == "not_free"

    def test_free_module_rank(self, ring_a, pa):
        free = free_module(ring_a, (0, 0, 1))
        px = RIdeal(ring_a, (pa("x"),), prime_status="verified")
        result = localized_rank(free, px)
        assert result.kind == "free" and result.rank == 3

    def test_small_fixture_partner_not_free_at_irrelevant(self, ring_b, pb, n_b):
        m = RIdeal(ring_b, (pb("x"), pb("y")), prime_status="verified")
        assert localized_rank(n_b, m).kind == "not_free"

    def test_unverified_prime_rejected(self, ring_a, pa, n_a):
        bad = RIdeal(ring_a, (pa("x"),), prime_status="unknown")
        with pytest.raises(ValueError):
            localized_rank(n_a, bad)


class TestSyzygy:
    def test_first_syzygy_of_partner(self, ring_a, n_a):
        s = syzygy(n_a, 1)
        assert s.gen_degrees == (1,)
        assert s.matrix_strings() == [["y"]]

    def test_syzygy_of_free_is_zero(self, ring_a):
        assert module_is_zero(syzygy(free_module(ring_a, (0, 1)), 1))

    def test_zeroth_syzygy_minimizes(self, ring_a, pa):
        m = module_from_rows(ring_a, [[pa("1")]], (0,))
        assert module_is_zero(syzygy(m, 0))

    def test_second_syzygy_periodicity(self, ring_a, n_a):
        s2 = syzygy(n_a, 2)
        assert s2.matrix_strings() == [["x"]]
        assert s2.gen_degrees == (2,)
