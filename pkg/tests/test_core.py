"""Vectors, spans, duals, Gray map and the matrix text format."""

import random

import pytest

from z2zu.core import (
    AdditiveCode,
    AmbientShape,
    MixedVector,
    additive_span,
    dual_brute,
    format_matrix,
    format_row,
    gray_image,
    gray_map,
    gray_parameters,
    inner_product,
    lee_weight_vec,
    min_lee_weight,
    parse_matrix,
    scalar_mul,
    span,
    vec_add,
    zero_vector,
)
from z2zu.errors import (
    AmbientTooLarge,
    MatrixParseError,
    PreconditionViolation,
    ShapeMismatch,
    TrivialCode,
)
from z2zu.presets import preset_code
from z2zu.ring import ONE, U, V, ZERO
from z2zu.ring import mul as ring_mul

from conftest import random_code


def vec(alpha_bits, ring_elems):
    shape = AmbientShape(len(alpha_bits), len(ring_elems))
    return MixedVector.from_coords(shape, alpha_bits, ring_elems)


# ---------------------------------------------------------------- vectors


def test_shape_derived_sizes():
    s = AmbientShape(7, 1)
    assert s.big_n == 9
    assert s.ambient_size == 2 ** 9
    s0 = AmbientShape(0, 3)
    assert s0.big_n == 6


def test_shape_rejects_negative():
    with pytest.raises(ValueError):
        AmbientShape(-1, 2)


def test_vector_round_trips():
    v = vec([1, 0, 1], [U, V])
    assert v.bin_bits == (1, 0, 1)
    assert v.ring_elems == (U, V)
    assert MixedVector.from_packed(v.shape, v.packed) == v
    assert str(v) == "1 0 1 | u v"


def test_packed_order_is_binary_major():
    # packed values sort binary part first, then ring part
    shape = AmbientShape(1, 1)
    a = MixedVector.from_coords(shape, [0], [V])
    b = MixedVector.from_coords(shape, [1], [ZERO])
    assert a.packed < b.packed


def test_vec_add():
    v = vec([1, 1, 0], [ONE, U])
    w = vec([0, 1, 1], [U, U])
    s = vec_add(v, w)
    assert s.bin_bits == (1, 0, 1)
    assert s.ring_elems == (V, ZERO)
    assert (v + w) == s


def test_vec_add_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        vec_add(vec([1], [U]), vec([1, 0], [U]))


def test_scalar_mul_table():
    v = vec([1, 0], [ONE, U, V])
    # 1 and v act as identity on the binary part, u kills it
    assert scalar_mul(ONE, v) == v
    u_v = scalar_mul(U, v)
    assert u_v.bin_bits == (0, 0)
    assert u_v.ring_elems == (U, ZERO, U)
    vv = scalar_mul(V, v)
    assert vv.bin_bits == (1, 0)
    assert vv.ring_elems == (V, U, ONE)
    assert scalar_mul(ZERO, v).is_zero
    assert U * v == u_v


def test_scalar_mul_is_action(rng):
    # (cd)w == c(dw) and c(v+w) == cv + cw on random vectors
    shape = AmbientShape(3, 2)
    for _ in range(50):
        v = MixedVector(shape, rng.randrange(8), rng.randrange(16))
        w = MixedVector(shape, rng.randrange(8), rng.randrange(16))
        for c in range(4):
            for d in range(4):
                # the product reduces in the ring, not in the integers
                lhs = scalar_mul(ring_mul(c, d), v)
                assert lhs == scalar_mul(c, scalar_mul(d, v))
            assert scalar_mul(c, v + w) == scalar_mul(c, v) + scalar_mul(c, w)


def test_lee_weight_examples():
    assert lee_weight_vec(vec([1, 1, 1, 0, 0, 0, 1], [U])) == 6
    assert lee_weight_vec(zero_vector(AmbientShape(4, 4))) == 0
    # all-ones binary with all-u ring: alpha + 2*beta
    assert lee_weight_vec(vec([1] * 5, [U] * 3)) == 11


def test_gray_map_examples():
    assert gray_map(vec([1, 0], [U])) == (1, 0, 1, 1)
    assert gray_map(vec([], [V])) == (1, 0)
    assert gray_map(zero_vector(AmbientShape(2, 2))) == (0, 0, 0, 0, 0, 0)


def test_gray_weight_is_lee_weight(rng):
    shape = AmbientShape(5, 4)
    for _ in range(200):
        v = MixedVector(shape, rng.randrange(32), rng.randrange(256))
        assert sum(gray_map(v)) == lee_weight_vec(v)


def test_gray_is_isometry(rng):
    # Hamming distance of images equals Lee distance of vectors
    shape = AmbientShape(4, 3)
    for _ in range(200):
        v = MixedVector(shape, rng.randrange(16), rng.randrange(64))
        w = MixedVector(shape, rng.randrange(16), rng.randrange(64))
        gv, gw = gray_map(v), gray_map(w)
        hamming = sum(a ^ b for a, b in zip(gv, gw))
        assert hamming == lee_weight_vec(v + w)


def test_inner_product_values():
    assert inner_product(vec([1, 1], []), vec([1, 1], [])) == ZERO
    assert inner_product(vec([1, 0], []), vec([1, 1], [])) == U
    # binary coordinates contribute u * a_i * b_i
    assert inner_product(vec([1], [ONE]), vec([1], [ONE])) == V
    assert inner_product(vec([], [U]), vec([], [V])) == U


def test_inner_product_bilinear(rng):
    shape = AmbientShape(3, 3)
    for _ in range(100):
        v = MixedVector(shape, rng.randrange(8), rng.randrange(64))
        w = MixedVector(shape, rng.randrange(8), rng.randrange(64))
        x = MixedVector(shape, rng.randrange(8), rng.randrange(64))
        assert inner_product(v + w, x) == inner_product(v, x) + inner_product(w, x)
        assert inner_product(v, w) == inner_product(w, v)


def test_scalar_slides_through_inner_product(rng):
    # (c v) . w == c (v . w); this is what makes the subgroup dual a module
    shape = AmbientShape(3, 2)
    for _ in range(100):
        v = MixedVector(shape, rng.randrange(8), rng.randrange(16))
        w = MixedVector(shape, rng.randrange(8), rng.randrange(16))
        for c in range(4):
            assert inner_product(scalar_mul(c, v), w) == ring_mul(
                c, inner_product(v, w))


# ---------------------------------------------------------------- spans


def test_span_of_empty_is_trivial():
    c = span(AmbientShape(2, 1), [])
    assert c.cardinality == 1
    assert zero_vector(c.shape) in c


def test_span_contains_scalar_multiples():
    shape = AmbientShape(2, 2)
    g = MixedVector.from_coords(shape, [1, 0], [ONE, U])
    c = span(shape, [g])
    for s in range(4):
        assert scalar_mul(s, g) in c
    assert c.cardinality == 4  # g has a unit coordinate, so R*g is free
    assert c.is_module()


def test_span_closed_under_operations(rng):
    for _ in range(20):
        c = random_code(rng)
        words = list(c)
        for v in words[:8]:
            for w in words[:8]:
                assert v + w in c
            for s in range(4):
                assert scalar_mul(s, v) in c


def test_span_idempotent(rng):
    for _ in range(20):
        c = random_code(rng)
        again = span(c.shape, list(c))
        assert again == c


def test_additive_span_keeps_xor_closure_only():
    shape = AmbientShape(1, 1)
    g = MixedVector.from_coords(shape, [1], [ONE])
    sub = additive_span(shape, [g])
    assert sub.cardinality == 2
    assert not sub.is_module()
    full = span(shape, [g])
    assert full.cardinality == 4
    assert full.is_module()


def test_additive_span_agrees_when_u_closed():
    shape, rows = parse_matrix("1 0 1 | u 0 u\n0 1 1 | u u 0\n")
    assert additive_span(shape, rows) == span(shape, rows)


def test_module_ops_refuse_bare_subgroups():
    shape = AmbientShape(1, 1)
    g = MixedVector.from_coords(shape, [1], [ONE])
    sub = additive_span(shape, [g])
    with pytest.raises(PreconditionViolation):
        dual_brute(sub)


def test_reference_subgroup_code_is_not_a_module():
    c16 = preset_code("5.4")
    assert c16.cardinality == 16
    assert not c16.is_module()
    module = span(c16.shape, c16.generators)
    assert module.cardinality == 32
    assert module.is_module()


# ---------------------------------------------------------------- duals


def test_dual_of_self_dual_pair():
    shape, rows = parse_matrix("1 1 |\n")
    c = span(shape, rows)
    d = dual_brute(c)
    assert d == c


def test_dual_example_pair():
    shape, rows = parse_matrix("1 0 |\n")
    c = span(shape, rows)
    d = dual_brute(c)
    assert sorted(format_row(w) for w in d) == ["0 0 |", "0 1 |"]


def test_dual_of_trivial_is_ambient():
    shape = AmbientShape(2, 1)
    d = dual_brute(span(shape, []))
    assert d.cardinality == shape.ambient_size


def test_dual_cardinality_product(rng):
    for _ in range(40):
        c = random_code(rng, max_alpha=5, max_beta=3)
        d = dual_brute(c)
        assert c.cardinality * d.cardinality == c.shape.ambient_size


def test_dual_involution(rng):
    for _ in range(25):
        c = random_code(rng, max_alpha=5, max_beta=3)
        assert dual_brute(dual_brute(c)) == c


def test_dual_is_orthogonal(rng):
    c = random_code(rng, max_alpha=4, max_beta=3)
    d = dual_brute(c)
    for v in list(c)[:10]:
        for w in list(d)[:10]:
            assert inner_product(v, w) == ZERO


def test_dual_respects_ambient_bound():
    shape = AmbientShape(20, 4)  # big_n = 28 > 26
    c = span(shape, [MixedVector(shape, 1, 0)])
    with pytest.raises(AmbientTooLarge):
        dual_brute(c)


# ------------------------------------------------------------- gray image


def test_min_weight_and_gray_parameters():
    # u * (1|u) = 0, so the span is just {0, (1|u)}
    shape, rows = parse_matrix("1 | u\n")
    c = span(shape, rows)
    assert c.cardinality == 2
    assert min_lee_weight(c) == 3
    assert gray_parameters(c) == (3, 1, 3)


def test_min_weight_trivial_code_raises():
    with pytest.raises(TrivialCode):
        min_lee_weight(span(AmbientShape(1, 1), []))


def test_gray_image_is_linear(rng):
    for _ in range(10):
        c = random_code(rng, max_alpha=4, max_beta=3)
        img = gray_image(c)
        words = list(img.words)
        assert len(words) == c.cardinality
        word_set = set(words)
        for a in words[:12]:
            for b in words[:12]:
                assert (a ^ b) in word_set


def test_gray_parameters_of_reference_code():
    assert gray_parameters(preset_code("3.8")) == (14, 3, 8)


# ------------------------------------------------------------ matrix text


def test_parse_round_trip():
    text = "1 0 1 | u 0 u\n0 1 1 | u u 0\n"
    shape, rows = parse_matrix(text)
    assert shape == AmbientShape(3, 3)
    assert format_matrix(rows) == text


def test_parse_accepts_comments_blanks_and_aliases():
    shape, rows = parse_matrix(
        "# leading comment\n\n1 0 | 1+u\n0 1 | u+1   # trailing\n")
    assert shape == AmbientShape(2, 1)
    assert rows[0].ring_elems == (V,)
    assert rows[1].ring_elems == (V,)


def test_parse_alpha_zero_and_beta_zero():
    shape, rows = parse_matrix("| u v\n")
    assert shape == AmbientShape(0, 2)
    shape, rows = parse_matrix("1 1 0 |\n")
    assert shape == AmbientShape(3, 0)


def test_parse_errors_carry_position():
    with pytest.raises(MatrixParseError) as err:
        parse_matrix("1 0 | u\n1 | u\n")
    assert err.value.line == 2
    with pytest.raises(MatrixParseError):
        parse_matrix("1 0 u |\n")  # ring token on the binary side
    with pytest.raises(MatrixParseError):
        parse_matrix("1 0 1\n")  # missing separator
    with pytest.raises(MatrixParseError):
        parse_matrix("")  # no rows at all
    with pytest.raises(MatrixParseError):
        parse_matrix("1 | q\n")


def test_parse_rejects_second_separator():
    with pytest.raises(MatrixParseError):
        parse_matrix("1 | u | v\n")


def test_format_row_empty_sides():
    shape = AmbientShape(0, 1)
    v = MixedVector.from_coords(shape, [], [U])
    assert format_row(v) == "| u"
    shape = AmbientShape(2, 0)
    w = MixedVector.from_coords(shape, [1, 1], [])
    assert format_row(w) == "1 1 |"


# ------------------------------------------------------------- code object


def test_code_equality_ignores_generator_choice():
    shape, rows = parse_matrix("1 0 | u\n0 1 | u\n")
    c1 = span(shape, rows)
    c2 = span(shape, [rows[0] + rows[1], rows[1]])
    assert c1 == c2
    assert hash(c1) == hash(c2)
    assert len(c1) == c1.cardinality


def test_codewords_sorted_and_iterable():
    c = preset_code("4.3a")
    words = list(c)
    assert len(words) == 2
    packed = [w.packed for w in words]
    assert packed == sorted(packed)


def test_contains_rejects_other_shape():
    c = preset_code("4.3a")
    v = zero_vector(AmbientShape(3, 1))
    assert v not in c
