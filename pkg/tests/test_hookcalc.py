import random
from fractions import Fraction as Q
from math import comb, factorial

import pytest

from hooktrees import families
from hooktrees.errors import (
    ConstantMismatch,
    DenominatorVanishes,
    DomainError,
    NotInvertible,
    OrderExceeded,
    RhoRangeExceeded,
)
from hooktrees.hookcalc import (
    HookWeightFunction,
    alpha_family_count,
    alpha_family_series,
    binary_rho,
    egf_counts,
    rho_from_forest,
    rho_from_series,
    series_from_rho,
    solve_increasing,
    solve_simply_generated,
)
from hooktrees.series import TruncatedSeries, geometric, identity, log
from hooktrees.treeoracle import enumerate_trees, labellings_recursive


def catalan(k):
    return comb(2 * k, k) // (k + 1)


def random_tree_series(rng, order, positive=False):
    """Random exact-rational series with constant term 0."""
    lo = 1 if positive else -9
    coeffs = [Q(0)] + [
        Q(rng.randint(lo, 9), rng.randint(1, 9)) for _ in range(order)
    ]
    return TruncatedSeries(coeffs)


ALL_FAMILIES = [
    families.binary,
    lambda: families.kary(3),
    families.plane,
    families.labelled,
    lambda: families.yang(Q(1, 2), Q(3)),
    lambda: families.polyalpha(Q(2)),
]


class TestHookWeightFunction:
    def test_named_inverse_table_identity(self):
        rho = HookWeightFunction.named("1/n", 20)
        assert all(rho(n) * n == 1 for n in range(1, 21))

    def test_named_tables(self):
        assert HookWeightFunction.named("1", 3).values == (1, 1, 1)
        assert HookWeightFunction.named("n", 3).values == (1, 2, 3)

    def test_out_of_range(self):
        rho = HookWeightFunction.named("1", 4)
        with pytest.raises(RhoRangeExceeded):
            rho(5)
        with pytest.raises(RhoRangeExceeded):
            rho(0)

    def test_equality_ignores_origin(self):
        a = HookWeightFunction((Q(1), Q(1, 2)), origin="given")
        b = HookWeightFunction((Q(1), Q(1, 2)), origin="derived-from-F")
        assert a == b

    def test_from_spec_named_and_explicit(self):
        assert HookWeightFunction.from_spec("1/n", 4) == HookWeightFunction.named("1/n", 4)
        explicit = HookWeightFunction.from_spec("1,1/2,3", 3)
        assert explicit.values == (1, Q(1, 2), 3)
        with pytest.raises(ValueError):
            HookWeightFunction.from_spec("1,2", 3)


class TestSimplyGenerated:
    def test_binary_counts_trees(self):
        got = solve_simply_generated(families.binary(), 7)
        # independent check: weighted enumeration, then the Catalan formula
        rho_one = HookWeightFunction.named("1", 7)
        from hooktrees.treeoracle import weighted_sum

        for n in range(1, 8):
            assert got.coeff(n) == weighted_sum(n, families.binary(), rho_one)
            assert got.coeff(n) == catalan(n)

    def test_plane_counts_trees(self):
        got = solve_simply_generated(families.plane(), 6)
        for n in range(1, 7):
            assert got.coeff(n) == sum(1 for _ in enumerate_trees(n))

    def test_constant_phi_has_only_single_node(self):
        fam = families.from_expression("3")
        got = solve_simply_generated(fam, 5)
        assert got == TruncatedSeries([0, 3, 0, 0, 0, 0])

    def test_fixed_point_residual_vanishes(self):
        for make in ALL_FAMILIES:
            fam = make()
            T = solve_simply_generated(fam, 10)
            residual = T - identity(10) * fam.phi_series(10).compose(T)
            assert residual.coefficients == (0,) * 11


class TestIncreasing:
    def test_binary_counts_increasing_labellings(self):
        got = solve_increasing(families.binary(), 7)
        fam = families.binary()
        # independent: sum of degree weight times labelling count, per size
        for n in range(1, 8):
            total = sum(
                (fam.tree_weight_deg(t) * labellings_recursive(t)
                 for t in enumerate_trees(n)),
                Q(0),
            )
            assert got.coeff(n) * factorial(n) == total
            assert got.coeff(n) * factorial(n) == factorial(n)

    def test_plane_closed_form(self):
        got = solve_increasing(families.plane(), 10)
        closed = 1 - TruncatedSeries([1, -2], order=10).pow_rational(Q(1, 2))
        assert got == closed

    def test_labelled_closed_form(self):
        got = solve_increasing(families.labelled(), 10)
        assert got == log(geometric(10))

    def test_ode_residual_vanishes(self):
        for make in ALL_FAMILIES:
            fam = make()
            T = solve_increasing(fam, 10)
            residual = T.derivative() - fam.phi_series(10).compose(T)
            assert residual.coefficients == (0,) * 10

    def test_egf_counts(self):
        T = solve_increasing(families.plane(), 5)
        assert egf_counts(T) == [0, 1, 1, 3, 15, 105]


class TestRhoFromSeries:
    def test_catalan_under_binary_gives_all_ones(self):
        F = solve_simply_generated(families.binary(), 10)
        rho = rho_from_series(F, families.binary(), 10)
        assert rho.values == (1,) * 10

    def test_alpha_closed_form_gives_inverse_hooks(self):
        for alpha in (Q(1), Q(2), Q(3), Q(1, 2)):
            F = alpha_family_series(alpha, 12)
            rho = rho_from_series(F, families.polyalpha(alpha), 12)
            assert rho == HookWeightFunction.named("1/n", 12)

    def test_log_geometric_under_labelled(self):
        rho = rho_from_series(log(geometric(10)), families.labelled(), 10)
        assert rho == HookWeightFunction.named("1/n", 10)

    def test_requires_zero_constant(self):
        with pytest.raises(ValueError):
            rho_from_series(geometric(5), families.binary(), 5)

    def test_requires_enough_order(self):
        F = TruncatedSeries([0, 1, 1])
        with pytest.raises(OrderExceeded):
            rho_from_series(F, families.binary(), 5)

    def test_denominator_vanishes_with_index(self):
        # (1+F)^2 has [z^2] = 2*F_2 + F_1^2 = 0 for F = z - z^2/2...
        F = TruncatedSeries([0, 2, -2, 1, 1])
        with pytest.raises(DenominatorVanishes) as info:
            rho_from_series(F, families.binary(), 4)
        assert info.value.index == 3


class TestSeriesFromRho:
    def test_all_ones_matches_fixed_point(self):
        got = series_from_rho(
            HookWeightFunction.named("1", 8), families.binary(), 8
        )
        assert got == solve_simply_generated(families.binary(), 8)

    def test_inverse_hooks_match_ode(self):
        got = series_from_rho(
            HookWeightFunction.named("1/n", 8), families.binary(), 8
        )
        assert got == solve_increasing(families.binary(), 8)
        assert got.coefficients == (0, 1, 1, 1, 1, 1, 1, 1, 1)

    def test_zero_rho_gives_zero_series(self):
        rho = HookWeightFunction((Q(0),) * 6)
        got = series_from_rho(rho, families.plane(), 6)
        assert got.coefficients == (0,) * 7

    def test_first_coefficient_is_phi0_rho1(self):
        fam = families.yang(Q(1, 3), Q(5, 2))
        rho = HookWeightFunction((Q(7, 2), Q(1)))
        got = series_from_rho(rho, fam, 2)
        assert got.coeff(1) == fam.weight_of_degree(0) * Q(7, 2)

    def test_roundtrip_over_family_and_rho_grid(self):
        rng = random.Random(1729)
        upto = 16
        tables = {
            "1": HookWeightFunction.named("1", upto),
            "1/n": HookWeightFunction.named("1/n", upto),
            "n": HookWeightFunction.named("n", upto),
            "random": HookWeightFunction(
                tuple(Q(rng.randint(1, 12), rng.randint(1, 12)) for _ in range(upto))
            ),
        }
        for make in ALL_FAMILIES:
            fam = make()
            for rho in tables.values():
                F = series_from_rho(rho, fam, upto)
                assert rho_from_series(F, fam, upto) == rho


class TestBinaryRho:
    def test_epgf_with_inverse_hooks(self):
        F = TruncatedSeries([0] + [1] * 10)  # z/(1-z)
        assert binary_rho(F, 10) == HookWeightFunction.named("1/n", 10)

    def test_catalan_gives_all_ones(self):
        F = solve_simply_generated(families.binary(), 10)
        assert binary_rho(F, 10).values == (1,) * 10

    def test_specializes_rho_from_series(self):
        rng = random.Random(271828)
        fam = families.binary()
        for _ in range(10):
            F = random_tree_series(rng, 20, positive=True)
            assert binary_rho(F, 20) == rho_from_series(F, fam, 20)

    def test_denominator_vanishes_like_general_form(self):
        F = TruncatedSeries([0, 2, -2, 1, 1])
        with pytest.raises(DenominatorVanishes) as info:
            binary_rho(F, 4)
        assert info.value.index == 3


class TestRhoFromForest:
    def test_plane_inverse_recovers_all_ones(self):
        F = solve_simply_generated(families.plane(), 10)
        G = geometric(10).compose(F)  # 1/(1-F)
        rho = rho_from_forest(G, families.plane(), 10)
        assert rho.values == (1,) * 10

    def test_labelled_log_inverse(self):
        rho = rho_from_forest(geometric(10), families.labelled(), 10)
        assert rho == HookWeightFunction.named("1/n", 10)

    def test_agrees_with_tree_form(self):
        rng = random.Random(31337)
        for make in (families.plane, families.labelled):
            fam = make()
            phi = fam.phi_series(15)
            for _ in range(10):
                F = random_tree_series(rng, 15, positive=True)
                G = phi.compose(F)
                assert rho_from_forest(G, fam, 15) == rho_from_series(F, fam, 15)

    def test_constant_mismatch(self):
        with pytest.raises(ConstantMismatch):
            rho_from_forest(identity(5) + 2, families.plane(), 5)

    def test_not_invertible_without_linear_term(self):
        fam = families.from_expression("1+t^2")
        with pytest.raises(NotInvertible):
            rho_from_forest(identity(5) + 1, fam, 5)

    def test_denominator_vanishes(self):
        fam = families.plane()
        G = TruncatedSeries([1, 0, 1, 1])  # [z^1] G = 0 kills rho(2)
        with pytest.raises(DenominatorVanishes) as info:
            rho_from_forest(G, fam, 3)
        assert info.value.index == 2


class TestAlphaFamily:
    def test_counts_by_hand(self):
        assert alpha_family_count(1, 3) == 3
        assert alpha_family_count(1, 4) == 15

    def test_single_node_for_any_alpha(self):
        for alpha in (Q(1), Q(2), Q(7, 3), Q(1, 5)):
            assert alpha_family_count(alpha, 1) == 1

    def test_series_alpha_one(self):
        got = alpha_family_series(1, 4)
        assert got == TruncatedSeries([0, 1, Q(1, 2), Q(1, 2), Q(5, 8)])

    def test_series_matches_ode_solver(self):
        for alpha in (Q(1), Q(2), Q(3), Q(1, 2)):
            closed = alpha_family_series(alpha, 15)
            solved = solve_increasing(families.polyalpha(alpha), 15)
            assert closed == solved

    def test_counts_match_series(self):
        for alpha in (Q(1), Q(3), Q(2, 5)):
            T = alpha_family_series(alpha, 12)
            for n in range(1, 13):
                assert alpha_family_count(alpha, n) == factorial(n) * T.coeff(n)

    def test_domain(self):
        with pytest.raises(DomainError):
            alpha_family_series(0, 5)
        with pytest.raises(DomainError):
            alpha_family_count(Q(-1), 3)
