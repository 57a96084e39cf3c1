import numpy as np
import pytest

from slcurv.autodiff import Dual, HyperDual
from slcurv.fields import (
    ParseError,
    determinant_field,
    evaluate,
    parse_expression,
    quadric_field,
    sphere_field,
)
from slcurv.linalg import det_inverse


class TestDeterminantField:
    def test_identity_2x2(self):
        assert determinant_field(2)([1.0, 0.0, 0.0, 1.0]) == 1.0

    def test_diagonal_3x3(self):
        field = determinant_field(3)
        value = field(list(np.diag([2.0, 3.0, 1.0 / 6.0]).ravel()))
        assert value == pytest.approx(2.0 * 3.0 * (1.0 / 6.0), rel=1e-15)

    def test_dual_cofactor_slot(self):
        # seeding entry (0, 1) of I2: d(det)/da01 = cof(0, 1) = 0 at the identity
        field = determinant_field(2)
        args = [Dual(1.0), Dual(0.0, 1.0), Dual(0.0), Dual(1.0)]
        out = field(args)
        assert out.value == 1.0
        assert out.deriv == 0.0

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            determinant_field(0)
        with pytest.raises(ValueError):
            determinant_field(7)

    def test_agrees_with_lu_determinant(self, rng):
        for n in (2, 3, 4, 5):
            field = determinant_field(n)
            for _ in range(25):
                a = rng.uniform(-1, 1, size=(n, n))
                oracle = float(field(list(a.ravel())))
                det, _ = det_inverse(a)
                assert det == pytest.approx(oracle, rel=1e-10, abs=1e-12)

    def test_supports_n6(self, rng):
        field = determinant_field(6)
        a = rng.uniform(-1, 1, size=(6, 6))
        det, _ = det_inverse(a)
        assert float(field(list(a.ravel()))) == pytest.approx(det, rel=1e-10, abs=1e-12)


class TestParse:
    def test_det2_equivalence(self, rng):
        tree = parse_expression("x1*x4 - x2*x3", 4)
        field = determinant_field(2)
        for _ in range(100):
            p = list(rng.uniform(-2, 2, size=4))
            a, b = tree.evaluate(p), field(p)
            assert abs(a - b) <= 1e-14 * (1.0 + abs(b))

    def test_sphere(self):
        tree = parse_expression("x1^2 + x2^2 + x3^2", 3)
        assert tree.evaluate([1.0, 2.0, 2.0]) == 9.0

    def test_unclosed_paren_offset(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("x1/(", 1)
        assert exc.value.offset == 4

    def test_unknown_identifier(self):
        with pytest.raises(ParseError, match="unknown identifier"):
            parse_expression("sin(x1)", 1)

    def test_variable_out_of_arity(self):
        with pytest.raises(ParseError, match="exceeds arity"):
            parse_expression("x3 + 1", 2)

    def test_zero_index_variable(self):
        with pytest.raises(ParseError):
            parse_expression("x0", 2)

    def test_negative_exponent(self):
        with pytest.raises(ParseError, match="negative exponent"):
            parse_expression("x1^-2", 1)

    def test_non_literal_exponent(self):
        with pytest.raises(ParseError, match="non-negative integer literal"):
            parse_expression("x1^x2", 2)

    def test_precedence(self):
        tree = parse_expression("-x1^2", 1)
        assert tree.evaluate([3.0]) == -9.0
        tree = parse_expression("2*x1^2 + 1", 1)
        assert tree.evaluate([3.0]) == 19.0
        tree = parse_expression("8 - 4 - 2", 1)  # left association
        assert tree.evaluate([0.0]) == 2.0
        tree = parse_expression("8/4/2", 1)
        assert tree.evaluate([0.0]) == 1.0

    def test_whitespace_insignificant(self):
        a = parse_expression(" x1 + 2 * x2 ", 2)
        b = parse_expression("x1+2*x2", 2)
        assert a == b


class TestEvaluate:
    def test_det2_reals(self):
        assert evaluate(determinant_field(2), [2.0, 0.0, 0.0, 0.5]) == 1.0

    def test_parsed_product_rule(self):
        tree = parse_expression("x1*x2", 2)
        out = tree.evaluate([Dual(3.0, 1.0), Dual(5.0, 0.0)])
        assert out.value == 15.0
        assert out.deriv == 5.0

    def test_det3_mixed_second_derivative(self):
        # pair (slot 0, slot 4) = entries (0,0) and (1,1): d2(det)/da00 da11 = 1 at I
        field = determinant_field(3)
        eye = np.eye(3).ravel()
        args = [
            HyperDual(eye[k], 1.0 if k == 0 else 0.0, 1.0 if k == 4 else 0.0)
            for k in range(9)
        ]
        out = field(args)
        assert out.value == 1.0
        assert out.d12 == 1.0

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            determinant_field(2)([1.0, 2.0])

    def test_ring_division_error_propagates(self):
        tree = parse_expression("1/x1", 1)
        assert tree.evaluate([4.0]) == 0.25
        with pytest.raises(ZeroDivisionError):
            tree.evaluate([Dual(0.0, 1.0)])


ROUND_TRIP_CORPUS = [
    ("x1*x4 - x2*x3", 4),
    ("x1^2 + x2^2 + x3^2", 3),
    ("-x1 + 2*x2 - 3.5", 2),
    ("(x1 + x2)^3 / (1 + x3^2)", 3),
    ("x1/x2", 2),
    ("0.5*x1^4 - x1^2 + 1", 1),
    ("x1*x2*x3*x4*x5", 5),
    ("((x1))", 1),
    ("-(x1 - x2)", 2),
    ("x1^0 + x2^1", 2),
    ("2/(x1^2 + 1)", 1),
    ("1.25", 1),
    ("x1 - x2 - x3", 3),
    ("x1/x2/2", 2),
    ("3*x1^2*x2 - 2*x2^2/(1 + x1^2)", 2),
    (".5*x1", 1),
    ("x2^2 - x1*x3", 3),
    ("(x1 - 1)*(x1 + 1)", 1),
    ("-x1^2", 1),
    ("x1 + x2*x3^2 - x3/(2 + x2^2)", 3),
]


@pytest.mark.parametrize("text,arity", ROUND_TRIP_CORPUS)
def test_unparse_round_trip(text, arity, rng):
    first = parse_expression(text, arity)
    second = parse_expression(first.unparse(), arity)
    assert first == second
    for _ in range(50):
        p = list(rng.uniform(-1, 1, size=arity))
        a, b = first.evaluate(p), second.evaluate(p)
        assert abs(a - b) <= 1e-14 * (1.0 + abs(b))


def test_ring_generic_bitwise():
    # plain-real evaluation must equal the value slot of a dual evaluation
    # bitwise for division-free fields
    rng = np.random.default_rng(5)
    cases = [
        determinant_field(2),
        determinant_field(3),
        quadric_field([1.0, -1.0, 0.25]),
        sphere_field(4),
        parse_expression("3*x1^3 - x2*x1 + 0.125", 2).as_field(),
    ]
    for field in cases:
        for _ in range(20):
            p = rng.uniform(-2, 2, size=field.arity)
            plain = field(list(p))
            dualled = field([Dual(x, 1.0) for x in p])
            hyper = field([HyperDual(x, 1.0, 1.0, 0.0) for x in p])
            assert dualled.value == plain
            assert hyper.value == plain
