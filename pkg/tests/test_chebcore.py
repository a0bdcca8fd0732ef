"""Tests for approximant construction, evaluation, quality and persistence."""

import io

import numpy as np
import pytest

import bicheb as bc
from bicheb.errors import (
    ConvergenceError,
    DomainError,
    InvalidInputError,
    ParseError,
    SamplingError,
    ValidationError,
)

from conftest import f_cosxy, f_example2

# published reference values for the cos(x y) coefficient corner
COSXY_CORNER = {
    (0, 0): 0.880725579,
    (2, 0): -0.117388011,
    (0, 2): -0.117388011,
    (2, 2): -0.114883808,
    (4, 0): 0.001873213,
    (0, 4): 0.001873213,
    (4, 2): 0.002484444,
    (2, 4): 0.002484444,
    (4, 4): 0.000603385,
}


class TestChebT:
    def test_degree_zero_is_one(self):
        assert bc.cheb_t(0, 0.37) == 1.0

    def test_degree_two(self):
        assert bc.cheb_t(2, 0.5) == pytest.approx(-0.5, abs=1e-15)

    def test_degree_three(self):
        assert bc.cheb_t(3, 0.8) == pytest.approx(-0.352, abs=1e-12)

    def test_clamps_tiny_overshoot(self):
        assert bc.cheb_t(5, 1.0 + 1e-13) == pytest.approx(1.0, abs=1e-12)

    def test_rejects_material_overshoot(self):
        with pytest.raises(DomainError):
            bc.cheb_t(2, 1.1)

    def test_rejects_negative_degree(self):
        with pytest.raises(InvalidInputError):
            bc.cheb_t(-1, 0.0)


class TestChebVector:
    def test_all_ones_at_one(self):
        assert np.allclose(bc.cheb_vector(2, 1.0), [1, 1, 1], atol=1e-15)

    def test_alternating_at_minus_one(self):
        assert np.allclose(bc.cheb_vector(3, -1.0), [1, -1, 1, -1], atol=1e-15)

    def test_pattern_at_zero(self):
        assert np.allclose(bc.cheb_vector(4, 0.0), [1, 0, -1, 0, 1], atol=1e-15)

    def test_matches_cheb_t(self):
        v = bc.cheb_vector(7, 0.3)
        for k in range(8):
            assert v[k] == pytest.approx(bc.cheb_t(k, 0.3), abs=1e-14)


class TestSampleGrid:
    def test_constant(self):
        grid = bc.sample_grid(lambda x, y: 5.0, 4)
        assert grid.values.shape == (4, 4)
        assert np.all(grid.values == 5.0)

    def test_coordinate_function_column_pattern(self):
        grid = bc.sample_grid(lambda x, y: x + 0.0 * y, 4)
        expected = np.repeat(np.array([1.0, 0.0, -1.0, 0.0])[:, None], 4, axis=1)
        assert np.allclose(grid.values, expected, atol=1e-12)

    def test_matches_direct_evaluation(self):
        grid = bc.sample_grid(f_cosxy, 16)
        u = np.cos(2 * np.pi * np.arange(16) / 16)
        direct = np.cos(np.outer(u, u))
        assert np.abs(grid.values - direct).max() < 1e-14

    def test_symmetry_is_exact(self):
        m = 16
        grid = bc.sample_grid(f_cosxy, m)
        mirror = (m - np.arange(m)) % m
        assert np.array_equal(grid.values, grid.values[mirror, :])
        assert np.array_equal(grid.values, grid.values[:, mirror])

    def test_scalar_fallback_matches_vectorized(self):
        vec = bc.sample_grid(f_cosxy, 8)
        loop = bc.sample_grid(lambda x, y: float(np.cos(x * y)), 8,
                              vectorized=False)
        assert np.array_equal(vec.values, loop.values)

    def test_non_finite_sample_names_node(self):
        def bad(x, y):
            return np.where(x > 0.9, np.nan, 1.0) + 0.0 * y

        with pytest.raises(SamplingError, match="node"):
            bc.sample_grid(bad, 8)

    def test_rejects_bad_size(self):
        with pytest.raises(InvalidInputError):
            bc.sample_grid(f_cosxy, 12)
        with pytest.raises(InvalidInputError):
            bc.sample_grid(f_cosxy, 1)

    def test_domain_mapping(self):
        domain = bc.Domain2(0.0, 2.0, -1.0, 3.0)
        grid = bc.sample_grid(lambda x, y: x + 10.0 * y, 4, domain)
        # node 0 maps to (xhi, yhi)
        assert grid.values[0, 0] == pytest.approx(2.0 + 30.0, abs=1e-12)


class TestCoeffsFromSamples:
    def test_constant_is_pure_dc(self):
        grid = bc.sample_grid(lambda x, y: 1.0, 16)
        a = bc.coeffs_from_samples(grid, 7)
        assert a[0, 0] == pytest.approx(1.0, abs=1e-14)
        a[0, 0] = 0.0
        assert np.abs(a).max() <= 1e-14

    def test_separable_basis_product(self):
        def f(x, y):
            return (2 * x ** 2 - 1) * (4 * y ** 3 - 3 * y)

        a = bc.coeffs_from_samples(bc.sample_grid(f, 16), 7)
        assert a[2, 3] == pytest.approx(1.0, abs=1e-12)
        a[2, 3] = 0.0
        assert np.abs(a).max() <= 1e-12

    def test_cosxy_reference_corner(self):
        a = bc.coeffs_from_samples(bc.sample_grid(f_cosxy, 32), 15)
        for (i, j), v in COSXY_CORNER.items():
            assert a[i, j] == pytest.approx(v, abs=1e-6)
        odd = np.abs(a[1::2, :]).max()
        odd = max(odd, np.abs(a[:, 1::2]).max())
        assert odd <= 1e-12

    def test_rejects_undersized_grid(self):
        grid = bc.sample_grid(f_cosxy, 16)
        with pytest.raises(InvalidInputError):
            bc.coeffs_from_samples(grid, 8)  # needs m >= 18
        with pytest.raises(InvalidInputError):
            bc.coeffs_from_samples(grid, 0)


class TestBuildAdaptive:
    def test_constant_collapses_to_single_coefficient(self):
        c = bc.build_adaptive(lambda x, y: 3.5, 1e-15)
        assert (c.degree_x, c.degree_y) == (0, 0)
        assert c.coeffs[0, 0] == pytest.approx(3.5, abs=1e-14)

    def test_cosxy_corner(self, cosxy):
        for (i, j), v in COSXY_CORNER.items():
            assert cosxy.coeffs[i, j] == pytest.approx(v, abs=1e-6)

    def test_example2_block_size(self, example2):
        assert 25 <= example2.degree_x + 1 <= 70
        assert 25 <= example2.degree_y + 1 <= 70

    def test_exactly_representable_polynomial_recovered(self):
        rng = np.random.default_rng(7)
        target = rng.uniform(-1.0, 1.0, size=(5, 5))
        reference = bc.Cheb2(target)

        def f(x, y):
            return bc.evaluate_matrix(reference, x, y)

        c = bc.build_adaptive(f, 1e-15)
        assert c.coeffs.shape == (5, 5)
        assert np.abs(c.coeffs - target).max() <= 1e-12
        pts = rng.uniform(-1.0, 1.0, size=(100, 2))
        for x, y in pts:
            assert bc.evaluate_matrix(c, x, y) == pytest.approx(f(x, y), abs=1e-11)

    def test_relative_tolerance_mode(self):
        c = bc.build_adaptive(lambda x, y: 1e6 * np.cos(x * y), 1e-15,
                              relative=True)
        assert c.tol == pytest.approx(1e-9, rel=1e-6)
        assert c.coeffs[0, 0] == pytest.approx(1e6 * 0.880725579, rel=1e-6)

    def test_no_convergence_carries_tail(self):
        with pytest.raises(ConvergenceError) as info:
            bc.build_adaptive(lambda x, y: np.abs(x) + 0.0 * y, 1e-15, max_n=16)
        assert info.value.tail_magnitude > 0

    def test_parameter_validation(self):
        with pytest.raises(InvalidInputError):
            bc.build_adaptive(f_cosxy, 0.0)
        with pytest.raises(InvalidInputError):
            bc.build_adaptive(f_cosxy, 1e-15, n0=3)
        with pytest.raises(InvalidInputError):
            bc.build_adaptive(f_cosxy, 1e-15, n0=8, max_n=4)


class TestTrim:
    def test_small_matrix(self):
        sparse = bc.trim(np.array([[1.0, 1e-20], [0.0, 2.0]]), 1e-15)
        assert sparse.entries == ((0, 0, 1.0), (1, 1, 2.0))
        assert (sparse.degree_x, sparse.degree_y) == (1, 1)

    def test_all_zero_matrix(self):
        sparse = bc.trim(np.zeros((3, 3)), 1e-15)
        assert sparse.entries == ()
        assert (sparse.degree_x, sparse.degree_y) == (0, 0)
        zero = bc.to_cheb2(sparse)
        assert bc.evaluate_matrix(zero, 0.3, -0.4) == 0.0

    def test_cosxy_even_layout(self, cosxy):
        # threshold below the smallest table value keeps the 3x3-of-even grid
        sparse = bc.trim(cosxy.coeffs, 5e-4)
        positions = {(i, j) for i, j, _ in sparse.entries}
        assert positions == {(i, j) for i in (0, 2, 4) for j in (0, 2, 4)}
        # a threshold above 0.000603385 drops the (4, 4) corner
        sparse = bc.trim(cosxy.coeffs, 1e-3)
        positions = {(i, j) for i, j, _ in sparse.entries}
        assert (4, 4) not in positions
        assert len(positions) == 8

    def test_degrees_shrink(self):
        a = np.zeros((6, 6))
        a[2, 3] = 1.0
        sparse = bc.trim(a, 1e-15)
        assert (sparse.degree_x, sparse.degree_y) == (2, 3)

    def test_rejects_negative_tol(self):
        with pytest.raises(InvalidInputError):
            bc.trim(np.ones((2, 2)), -1.0)


class TestEvaluate:
    def test_constant_everywhere(self):
        c = bc.Cheb2(np.array([[2.5]]))
        for x, y in [(-1, -1), (0, 0.7), (1, 1)]:
            assert bc.evaluate_matrix(c, x, y) == 2.5

    def test_separable_product(self):
        a = np.zeros((3, 4))
        a[2, 3] = 1.0
        c = bc.Cheb2(a)
        expected = (-0.82) * 0.728  # T2(0.3) * T3(-0.7)
        assert bc.evaluate_matrix(c, 0.3, -0.7) == pytest.approx(expected, abs=1e-12)

    def test_truncated_cosxy_error_level(self, cosxy):
        truncated = bc.truncate(cosxy, 4, 4)
        xs = np.linspace(0.0, 1.0, 50)
        values = bc.evaluate_grid(truncated, xs, xs)
        exact = np.cos(np.outer(xs, xs))
        max_err = np.abs(values - exact).max()
        assert max_err == pytest.approx(0.000082141, abs=2e-5)

    def test_clenshaw_equals_matrix_form(self):
        rng = np.random.default_rng(21)
        c = bc.Cheb2(rng.standard_normal((6, 5)))
        for x, y in rng.uniform(-1.0, 1.0, size=(100, 2)):
            m = bc.evaluate_matrix(c, x, y)
            s = bc.evaluate_clenshaw(c, x, y)
            assert s == pytest.approx(m, rel=1e-12, abs=1e-13)

    def test_clenshaw_bilinear(self):
        a = np.zeros((2, 2))
        a[1, 1] = 1.0
        c = bc.Cheb2(a)
        assert bc.evaluate_clenshaw(c, 0.5, 0.25) == pytest.approx(0.125, abs=1e-15)

    def test_outside_domain_raises(self):
        c = bc.Cheb2(np.array([[1.0]]), bc.Domain2(0.0, 1.0, 0.0, 1.0))
        with pytest.raises(DomainError, match="1.5"):
            bc.evaluate_matrix(c, 1.5, 0.5)
        with pytest.raises(DomainError):
            bc.evaluate_clenshaw(c, 0.5, -0.1)
        with pytest.raises(DomainError):
            bc.evaluate_grid(c, [0.2, 1.4], [0.5])

    def test_grid_matches_pointwise(self, cosxy):
        xs = np.linspace(-1.0, 1.0, 7)
        ys = np.linspace(-1.0, 1.0, 5)
        grid = bc.evaluate_grid(cosxy, xs, ys)
        for i, x in enumerate(xs):
            for j, y in enumerate(ys):
                assert grid[i, j] == pytest.approx(
                    bc.evaluate_matrix(cosxy, x, y), abs=1e-14)


class TestParsevalIndicator:
    def test_exactly_representable_function(self):
        a = np.zeros((2, 2))
        a[1, 1] = 1.0
        c = bc.Cheb2(a)
        value = bc.parseval_indicator(c, lambda x, y: x * y)
        assert abs(value) <= 1e-12

    def test_truncated_cosxy(self, cosxy):
        truncated = bc.truncate(cosxy, 4, 4)
        value = bc.parseval_indicator(truncated, f_cosxy)
        assert 3.97247e-11 <= value <= 3.97247e-9

    def test_full_example2(self, example2):
        value = bc.parseval_indicator(example2, f_example2)
        assert abs(value) <= 1e-12


class TestCoeffsByQuadrature:
    def test_constant(self):
        assert bc.coeffs_by_quadrature(lambda x, y: 1.0, 0, 0, 64) == \
            pytest.approx(1.0, abs=1e-12)

    def test_cubic_basis_function(self):
        def f(x, y):
            return 4 * x ** 3 - 3 * x + 0.0 * y

        assert bc.coeffs_by_quadrature(f, 3, 0, 64) == pytest.approx(1.0, abs=1e-10)

    def test_cosxy_leading_coefficient(self):
        value = bc.coeffs_by_quadrature(f_cosxy, 0, 0, 256)
        assert value == pytest.approx(0.880725579, abs=1e-8)

    def test_rejects_too_few_nodes(self):
        with pytest.raises(InvalidInputError):
            bc.coeffs_by_quadrature(f_cosxy, 10, 0, 32)


class TestCrossChecks:
    @pytest.mark.parametrize("f", [
        f_cosxy,
        lambda x, y: np.exp(x * y),
        lambda x, y: x ** 3 * y ** 2,
    ])
    def test_transform_path_matches_quadrature(self, f):
        alpha = bc.coeffs_from_samples(bc.sample_grid(f, 64), 8)
        for k in range(9):
            for j in range(9):
                oracle = bc.coeffs_by_quadrature(f, k, j, 512)
                assert alpha[k, j] == pytest.approx(oracle, abs=1e-8)

    def test_decay_bounds_for_cosxy(self, cosxy):
        # |d2/dx2 cos(xy)| = |y^2 cos(xy)| <= 1 on the square, same in y
        bounds = bc.DecayBounds(1.0, 1.0, 1.0)
        assert bc.decay_bound_excess(cosxy, bounds) <= 0.0

    def test_grid_error_is_monotone_in_degree(self, cosxy):
        xs = np.linspace(-1.0, 1.0, 50)
        exact = np.cos(np.outer(xs, xs))
        errors = []
        for n in (4, 8, 16):
            t = bc.truncate(cosxy, n, n)
            errors.append(np.abs(bc.evaluate_grid(t, xs, xs) - exact).max())
        assert errors[1] <= errors[0] + 1e-14
        assert errors[2] <= errors[1] + 1e-14

    def test_retained_coefficients_minimize_weighted_residual(self):
        rng = np.random.default_rng(11)
        target = rng.uniform(-1.0, 1.0, size=(5, 5))
        reference = bc.Cheb2(target)

        def f(x, y):
            return bc.evaluate_matrix(reference, x, y)

        c = bc.build_adaptive(f, 1e-15)
        samples = bc.sample_grid(f, 64).values
        u = np.cos(2 * np.pi * np.arange(64) / 64)

        def residual(coeffs):
            approx = bc.evaluate_grid(bc.Cheb2(coeffs), u, u)
            return float(np.mean((samples - approx) ** 2))

        base = residual(c.coeffs)
        for i in range(c.degree_x + 1):
            for j in range(c.degree_y + 1):
                for delta in (1e-3, -1e-3):
                    perturbed = np.array(c.coeffs)
                    perturbed[i, j] += delta
                    assert residual(perturbed) > base


class TestPersistence:
    def test_round_trip_through_buffer(self, cosxy):
        sparse = bc.to_sparse(cosxy)
        buffer = io.StringIO()
        bc.save(sparse, buffer)
        loaded = bc.load(io.StringIO(buffer.getvalue()))
        assert loaded == sparse

    def test_round_trip_through_file(self, cosxy, tmp_path):
        sparse = bc.to_sparse(cosxy)
        path = tmp_path / "c.json"
        bc.save(sparse, path)
        assert bc.load(path) == sparse

    def test_repeated_save_is_byte_identical(self, cosxy):
        sparse = bc.to_sparse(cosxy)
        first = bc.document_text(sparse)
        second = bc.document_text(bc.load(io.StringIO(first)))
        assert first == second

    def test_dense_round_trip_is_bitwise(self, cosxy):
        text = bc.document_text(bc.to_sparse(cosxy))
        back = bc.to_cheb2(bc.load(io.StringIO(text)))
        assert back.coeffs.shape == cosxy.coeffs.shape
        assert np.array_equal(back.coeffs, cosxy.coeffs)

    def test_empty_entries_is_zero_function(self):
        text = ('{"degree_x": 0, "degree_y": 0, "domain": [-1, 1, -1, 1], '
                '"tol": 1e-15, "entries": []}')
        c = bc.to_cheb2(bc.load(io.StringIO(text)))
        assert bc.evaluate_matrix(c, 0.123, -0.9) == 0.0

    def test_malformed_document_reports_location(self):
        with pytest.raises(ParseError) as info:
            bc.load(io.StringIO('{"degree_x": 0, '))
        assert info.value.position >= 0

    def test_entry_beyond_degrees_is_invalid(self):
        text = ('{"degree_x": 2, "degree_y": 2, "domain": [-1, 1, -1, 1], '
                '"tol": 0, "entries": [[3, 0, 1.0]]}')
        with pytest.raises(ValidationError):
            bc.load(io.StringIO(text))

    def test_unsorted_entries_are_invalid(self):
        text = ('{"degree_x": 2, "degree_y": 2, "domain": [-1, 1, -1, 1], '
                '"tol": 0, "entries": [[1, 1, 1.0], [0, 0, 2.0]]}')
        with pytest.raises(ValidationError):
            bc.load(io.StringIO(text))

    def test_zero_valued_entry_is_invalid(self):
        text = ('{"degree_x": 2, "degree_y": 2, "domain": [-1, 1, -1, 1], '
                '"tol": 0, "entries": [[0, 0, 0.0]]}')
        with pytest.raises(ValidationError):
            bc.load(io.StringIO(text))

    def test_missing_key_is_invalid(self):
        with pytest.raises(ValidationError, match="missing"):
            bc.load(io.StringIO('{"degree_x": 0}'))

    def test_bad_domain_is_invalid(self):
        text = ('{"degree_x": 0, "degree_y": 0, "domain": [1, -1, -1, 1], '
                '"tol": 0, "entries": []}')
        with pytest.raises(ValidationError):
            bc.load(io.StringIO(text))
