"""Periodic quiver construction, detection, decomposition and folding."""

import random

import pytest

from quiverseq.errors import ConstraintError, NotPeriodOneError, NotSinkTypeError
from quiverseq.periodicity import (
    decompose_period1,
    detect_period,
    epsilon,
    fold_to_period1,
    has_period,
    layer_report,
    layers_to_matrix,
    period1_from_weights,
    period2_four_node,
    period2_five_node,
    period2_sigma_family,
    pnn_exceptional_search,
    primitive,
    primitive_ids,
    sink_type_decompose,
)
from quiverseq.quiver import ExchangeMatrix
from quiverseq.recurrence import preset


def random_palindrome(rng, N, bound=3):
    half = [rng.randint(-bound, bound) for _ in range((N - 1) // 2)]
    middle = [rng.randint(-bound, bound)] if (N - 1) % 2 else []
    return half + middle + half[::-1]


# -- epsilon ------------------------------------------------------------------


def test_epsilon_values():
    assert epsilon(1, -2) == 2
    assert epsilon(3, 5) == 0
    assert epsilon(-2, 1) == -2
    assert epsilon(0, -7) == 0


def test_epsilon_antisymmetry():
    rng = random.Random(1)
    for _ in range(100):
        x, y = rng.randint(-9, 9), rng.randint(-9, 9)
        assert epsilon(x, y) == -epsilon(y, x)


# -- primitives ----------------------------------------------------------------


def test_first_primitive_arrows():
    P = primitive(4, 1)
    arrows = {(i + 1, j + 1) for i in range(4) for j in range(4) if P.b[i][j] > 0}
    assert arrows == {(2, 1), (3, 2), (4, 3), (4, 1)}


def _tau_power(N, p):
    tau = [[0] * N for _ in range(N)]
    tau[0][N - 1] = -1
    for i in range(1, N):
        tau[i][i - 1] = 1
    power = [[1 if i == j else 0 for j in range(N)] for i in range(N)]
    for _ in range(p):
        power = [
            [sum(power[i][l] * tau[l][j] for l in range(N)) for j in range(N)]
            for i in range(N)
        ]
    return power


def test_half_orbit_primitive_is_tau_power():
    # single arrow r+1 -> 1 rotated through half the vertices gives tau^r
    for r in (1, 2, 3):
        N = 2 * r
        P = primitive(N, r)
        assert P == ExchangeMatrix.from_entries(_tau_power(N, r))


def test_primitive_is_tau_difference():
    # full-orbit primitives equal tau^k - (tau^t)^k entrywise
    for N in range(2, 9):
        for k in range(1, (N - 1) // 2 + 1):
            P = primitive(N, k)
            expected = ExchangeMatrix.zero(N)
            arrow = [[0] * N for _ in range(N)]
            # tau^k has entry +1 at (i, i-k) away from wraps, -1 signs at wraps
            rows = [[0] * N for _ in range(N)]
            for i in range(N):
                j = i - k
                sign = 1
                if j < 0:
                    j += N
                    sign = -1
                rows[i][j] += sign
                rows[j][i] -= sign
            expected = ExchangeMatrix(N, tuple(map(tuple, rows)))
            assert P == expected, (N, k)
            assert arrow is not None


def test_primitive_copies_are_tau_conjugates():
    assert primitive(6, 1, 3, 2) == primitive(6, 1, 3, 1).conjugate_tau(1)
    assert primitive(8, 2, 2, 2) == primitive(8, 2, 2, 1).conjugate_tau(1)


def test_primitive_validity():
    with pytest.raises(ConstraintError):
        primitive(6, 1, 4)  # 4 does not divide 6
    with pytest.raises(ConstraintError):
        primitive(6, 3, 2)  # k = N/2 needs 2m | N
    with pytest.raises(ConstraintError):
        primitive(6, 4)  # k > N/2
    with pytest.raises(ConstraintError):
        primitive(6, 1, 2, 3)  # copy out of range


def test_primitive_periods_exhaustive():
    for N in range(2, 9):
        for m in (d for d in range(1, N + 1) if N % d == 0):
            for k, j in primitive_ids(N, m):
                B = primitive(N, k, m, j)
                assert detect_period(B) == m, (N, m, k, j)


def test_period2_primitive_subdiagonal_nonnegative():
    for N in (4, 6, 8):
        for k, j in primitive_ids(N, 2):
            P = primitive(N, k, 2, j)
            for i in range(N):
                for jj in range(i):
                    assert P.b[i][jj] >= 0


# -- detection -------------------------------------------------------------------


def test_detect_period_presets():
    assert detect_period(preset("somos4"), 4) == 1
    assert detect_period(preset("three_cycle_double")) == 2
    assert detect_period(preset("dP3")) == 2
    assert detect_period(preset("hirzebruch0")) == 2


def test_detect_period_none_below_bound():
    # the acyclic 3-path has an admissible sink sequence, hence period 3,
    # and nothing smaller
    B = ExchangeMatrix.from_entries([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
    assert detect_period(B, 2) is None
    assert detect_period(B, 6) == 3


def test_detect_period_none_for_wild_quiver():
    B = ExchangeMatrix.from_entries([[0, 2, -1], [-2, 0, 2], [1, -2, 0]])
    assert detect_period(B, 8) is None


def test_zero_matrix_period_one():
    assert detect_period(ExchangeMatrix.zero(4)) == 1


# -- the general period-1 solution ----------------------------------------------


def paper_template_4(m1, m2):
    e = epsilon(m1, m2)
    return ExchangeMatrix.from_entries(
        [
            [0, -m1, -m2, -m1],
            [m1, 0, -m1 - e, -m2],
            [m2, m1 + e, 0, -m1],
            [m1, m2, m1, 0],
        ]
    )


def paper_template_5(m1, m2):
    e = epsilon(m1, m2)
    return ExchangeMatrix.from_entries(
        [
            [0, -m1, -m2, -m2, -m1],
            [m1, 0, -m1 - e, -m2 - e, -m2],
            [m2, m1 + e, 0, -m1 - e, -m2],
            [m2, m2 + e, m1 + e, 0, -m1],
            [m1, m2, m2, m1, 0],
        ]
    )


def paper_template_6(m1, m2, m3):
    e12, e13, e23 = epsilon(m1, m2), epsilon(m1, m3), epsilon(m2, m3)
    base = [
        [0, -m1, -m2, -m3, -m2, -m1],
        [m1, 0, -m1, -m2, -m3, -m2],
        [m2, m1, 0, -m1, -m2, -m3],
        [m3, m2, m1, 0, -m1, -m2],
        [m2, m3, m2, m1, 0, -m1],
        [m1, m2, m3, m2, m1, 0],
    ]
    mid = [
        [0, 0, 0, 0, 0, 0],
        [0, 0, -e12, -e13, -e12, 0],
        [0, e12, 0, -e12, -e13, 0],
        [0, e13, e12, 0, -e12, 0],
        [0, e12, e13, e12, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ]
    core = [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, -e23, 0, 0],
        [0, 0, e23, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ]
    rows = [
        [base[i][j] + mid[i][j] + core[i][j] for j in range(6)] for i in range(6)
    ]
    return ExchangeMatrix.from_entries(rows)


def test_period1_matches_paper_templates():
    rng = random.Random(42)
    for _ in range(40):
        m1, m2, m3 = (rng.randint(-4, 4) for _ in range(3))
        assert period1_from_weights((m1, m2, m1)) == paper_template_4(m1, m2)
        assert period1_from_weights((m1, m2, m2, m1)) == paper_template_5(m1, m2)
        assert period1_from_weights((m1, m2, m3, m2, m1)) == paper_template_6(
            m1, m2, m3
        )


def test_somos4_weights():
    B = period1_from_weights((1, -2, 1))
    assert B == preset("somos4")
    assert B.b[2][1] == 1 + epsilon(1, -2) == 3


def test_somos5_weights():
    assert period1_from_weights((1, -1, -1, 1)) == preset("somos5")


def test_nonnegative_weights_are_primitive_sums():
    rng = random.Random(3)
    for _ in range(30):
        N = rng.randint(2, 9)
        ws = [rng.randint(0, 3) for _ in range((N - 1) // 2)]
        mid = [rng.randint(0, 3)] if (N - 1) % 2 else []
        weights = ws + mid + ws[::-1]
        B = period1_from_weights(weights)
        total = ExchangeMatrix.zero(N)
        for k in range(1, N // 2 + 1):
            total = total + primitive(N, k).scale(weights[k - 1])
        assert B == total


def test_period1_requires_palindrome():
    with pytest.raises(ConstraintError):
        period1_from_weights((1, 2))


def test_period1_has_period_one_and_diagonal_symmetry():
    rng = random.Random(11)
    for _ in range(60):
        N = rng.randint(2, 8)
        B = period1_from_weights(random_palindrome(rng, N))
        assert has_period(B, 1)
        for i in range(N):
            for j in range(N):
                assert B.b[i][j] == B.b[N - 1 - j][N - 1 - i]


def test_sink_type_invariant_under_iota():
    rng = random.Random(12)
    for _ in range(30):
        N = rng.randint(2, 8)
        ws = [abs(w) for w in random_palindrome(rng, N)]
        B = period1_from_weights(ws)
        assert B.conjugate_iota() == B.opposite()


# -- decomposition -----------------------------------------------------------------


def test_decompose_somos4():
    layers = decompose_period1(preset("somos4"))
    assert layers == {0: (1, -2), 1: (2,)}
    assert layer_report(4, layers) == "B4(1):1 B4(2):-2 | B2(1):2"


def test_decompose_somos5():
    layers = decompose_period1(preset("somos5"))
    assert layers == {0: (1, -1), 1: (1,)}
    assert layer_report(5, layers) == "B5(1):1 B5(2):-1 | B3(1):1"


def test_decompose_zero():
    layers = decompose_period1(ExchangeMatrix.zero(6))
    assert all(all(c == 0 for c in coeffs) for coeffs in layers.values())
    assert layer_report(6, layers) == "0"


def test_decompose_rejects_non_periodic():
    B = ExchangeMatrix.from_entries([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
    with pytest.raises(NotPeriodOneError):
        decompose_period1(B)
    with pytest.raises(NotPeriodOneError):
        decompose_period1(preset("three_cycle_double"))


def test_decompose_roundtrip_random():
    rng = random.Random(2024)
    for _ in range(200):
        N = rng.randint(2, 8)
        B = period1_from_weights(random_palindrome(rng, N))
        layers = decompose_period1(B)
        assert layers_to_matrix(N, layers) == B


# -- period-2 families ----------------------------------------------------------------


def test_four_node_template_entries():
    B1, B2 = period2_four_node(1, -2, 2)
    assert B1.b[1][2] == 1 * (-2) - 2 == -4  # entry (2,3) of the template
    assert B1.b[2][1] == 4
    assert B2 == B1.mutate(1)


def test_four_node_swap_identity():
    for m1, m3 in ((1, 2), (2, 0), (3, 1)):
        B1, B2 = period2_four_node(m1, -2, m3)
        swapped, _ = period2_four_node(m3, -2, m1) if m3 > 0 else (None, None)
        if swapped is not None:
            assert B2 == swapped.conjugate_rho(1)


def test_four_node_periods():
    B1, _ = period2_four_node(2, -2, 0)
    assert detect_period(B1) == 2
    assert B1 == preset("hirzebruch0")
    degenerate, _ = period2_four_node(1, -1, 1)
    assert detect_period(degenerate) == 1


def test_four_node_constraints():
    with pytest.raises(ConstraintError):
        period2_four_node(-1, -2, 0)
    with pytest.raises(ConstraintError):
        period2_four_node(1, 2, 0)
    with pytest.raises(ConstraintError):
        period2_four_node(1, -2, -1)


def test_five_node_pp():
    B1, B2 = period2_five_node("PP", 1, 2)
    assert B1.b[1][2] == -(1 + 2)
    assert detect_period(B1) == 2
    assert B2 == B1.mutate(1)
    # the swap identity B(2)(m1,m4) = rho B(1)(m4,m1) rho^-1
    other, _ = period2_five_node("PP", 2, 1)
    assert B2 == other.conjugate_rho(1)


def test_five_node_pnp():
    B1, _ = period2_five_node("PNP", 1)
    assert B1.b[0][3] == -2
    assert detect_period(B1) == 2
    B3, _ = period2_five_node("PNP", 3)
    assert detect_period(B3) == 2


def test_five_node_pnn():
    B1, _ = period2_five_node("PNN", 1, -2)
    assert detect_period(B1) == 2
    B2, _ = period2_five_node("PNN", 1, -5)
    assert detect_period(B2) == 2
    # the template's validity branch needs m3 < 0; larger m1 violate it
    with pytest.raises(ConstraintError):
        period2_five_node("PNN", 2, -2)
    with pytest.raises(ConstraintError):
        period2_five_node("PNN", 1, -1)


def test_pnn_exceptional_branch_has_no_small_solutions():
    assert pnn_exceptional_search(7) == []


def test_sigma_family_dp3():
    B = period2_sigma_family((1, -1, 1, -1, 0))
    assert B == preset("dP3")
    assert detect_period(B) == 2


def test_sigma_family_matches_pp():
    assert period2_sigma_family((1, -1, -1, 2)) == period2_five_node("PP", 1, 2)[0]


def test_sigma_family_defining_equation():
    # mutation at 1 equals the rotation of the swapped-weight matrix
    cases = [
        (1, -1, 1, -1, 0),
        (2, -1, 0, -1, 1),
        (0, 3, 2),
        (1, -2, 0),
        (1, -1, -1, 3),
    ]
    for ws in cases:
        ws = tuple(ws)
        B = period2_sigma_family(ws)
        swapped = (ws[-1],) + ws[1:-1] + (ws[0],)
        assert B.mutate(1) == period2_sigma_family(swapped).conjugate_rho(1)
        assert detect_period(B) == 2


def test_sigma_family_constraints():
    with pytest.raises(ConstraintError):
        period2_sigma_family((1, -1, 1))  # m1 = mlast
    with pytest.raises(ConstraintError):
        period2_sigma_family((1, 2, 2, 0))  # odd N needs m2 = -1
    with pytest.raises(ConstraintError):
        period2_sigma_family((-1, 0, 0, 2))  # negative edge weight
    with pytest.raises(ConstraintError):
        period2_sigma_family((1, 0, -1, 0, 0, 2))  # m3 < 0 with N = 7


# -- sink-type decomposition and folding ----------------------------------------------


def test_sink_decompose_period1():
    B = primitive(6, 1).scale(2) + primitive(6, 3)
    result = sink_type_decompose(B, 1)
    assert result.nonzero() == {(1, 1): 2, (3, 1): 1}


def test_sink_decompose_rejects_somos4():
    with pytest.raises(NotSinkTypeError):
        sink_type_decompose(preset("somos4"), 1)


def test_sink_decompose_degenerate_flag():
    B = primitive(6, 1, 2, 1) + primitive(6, 1, 2, 2)
    result = sink_type_decompose(B, 2)
    assert not result.strict
    strict = primitive(6, 1, 2, 1).scale(2) + primitive(6, 1, 2, 2)
    assert sink_type_decompose(strict, 2).strict


def test_sink_decompose_period2_with_half_slot():
    # N = 6, m = 2: the k = 3 slot is covered by the period-1 primitive
    B = primitive(6, 1, 2, 1) + primitive(6, 3).scale(2)
    result = sink_type_decompose(B, 2)
    assert result.coeffs[(3, 1)] == 2


def test_fold_reassembles_full_orbits():
    assert fold_to_period1(primitive(6, 1, 2, 1), 2) == primitive(6, 1)
    assert fold_to_period1(primitive(4, 2, 2, 1), 2) == primitive(4, 2)
    assert fold_to_period1(primitive(6, 2, 3, 1), 3) == primitive(6, 2)


def test_fold_identity_for_period1():
    B = primitive(5, 2).scale(3)
    assert fold_to_period1(B, 1) == B


def test_fold_output_is_period1():
    rng = random.Random(8)
    for N, m in ((4, 2), (6, 2), (6, 3), (8, 2), (8, 4)):
        total = ExchangeMatrix.zero(N)
        for k, j in primitive_ids(N, m):
            total = total + primitive(N, k, m, j).scale(rng.randint(0, 2))
        if total.is_zero():
            continue
        folded = fold_to_period1(total, m)
        assert has_period(folded, 1)


def test_fold_rejects_non_sink_type():
    with pytest.raises(NotSinkTypeError):
        fold_to_period1(preset("three_cycle_double"), 2)


def test_nonneg_primitive_sums_have_period_one():
    rng = random.Random(17)
    for N in range(2, 11):
        coeffs = [rng.randint(0, 3) for _ in range(N // 2)]
        total = ExchangeMatrix.zero(N)
        for k, c in enumerate(coeffs, start=1):
            total = total + primitive(N, k).scale(c)
        assert has_period(total, 1)


def test_decompose_rejects_palindromic_but_aperiodic():
    B = preset("somos4")
    rows = [list(r) for r in B.b]
    rows[1][2] += 1  # keep the first column, break the interior
    rows[2][1] -= 1
    broken = ExchangeMatrix.from_entries(rows)
    with pytest.raises(NotPeriodOneError):
        decompose_period1(broken)


def test_sink_decompose_odd_vertices_period3():
    B = primitive(9, 1, 3, 2).scale(2) + primitive(9, 4, 3, 1)
    result = sink_type_decompose(B, 3)
    assert result.nonzero() == {(1, 2): 2, (4, 1): 1}
    assert result.strict
    folded = fold_to_period1(B, 3)
    assert has_period(folded, 1)
