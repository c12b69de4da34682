import random

import pytest

from gaussian_codes import (
    GaussianInt as G,
    IdentityViolation,
    InvalidPrime,
    Poly,
    WrongModulusShape,
    build_half_code,
    build_multiprime_code,
    build_quarter_code,
    encode,
    generator_matrix,
    identity_violations,
    is_codeword,
    parity_check_matrix,
)
from gaussian_codes.codes import ConstacyclicCode

I = G(0, 1)


def all_codes():
    return [
        build_quarter_code(5, sign="plus"),
        build_quarter_code(5, sign="minus"),
        build_half_code(5),
        build_quarter_code(13, sign="plus"),
        build_quarter_code(13, sign="minus"),
        build_half_code(13),
        build_multiprime_code([5, 13], 1),
        build_multiprime_code([5, 13], 2),
        build_half_code(5, roots=[2, G(1, -1)]),
        build_multiprime_code([5, 13], 1, root=G(3, 1)),
        build_quarter_code(5, k_exp=3),
        build_quarter_code(17),
    ]


def test_quarter_p5():
    plus = build_quarter_code(5, 2, "plus")
    assert (plus.n, plus.lam, plus.k) == (5, I, 4)
    assert plus.gen == Poly(plus.ring, [2, 1])  # root -2 from the scan
    assert plus.gen * plus.check == Poly.x_pow_minus(plus.ring, 5, I)
    minus = build_quarter_code(5, 2, "minus")
    assert minus.lam == G(0, -1)
    assert minus.gen == Poly(minus.ring, [-2, 1])
    paper_root = build_quarter_code(5, 2, "plus", root=G(1, -1))
    assert paper_root.gen == Poly(paper_root.ring, [G(-1, 1), 1])
    assert paper_root.gen * paper_root.check == Poly.x_pow_minus(paper_root.ring, 5, I)


def test_quarter_p13_length():
    assert build_quarter_code(13).n == 39


def test_half_example1(example1_code):
    c = example1_code
    assert c.n == 10 and c.k == 8 and c.lam == G(-1, 0)
    assert c.gen == Poly(c.ring, [G(-2, 1), G(1, -2), 1])
    assert c.gen * c.check == Poly.x_pow_minus(c.ring, 10, -1)


def test_multiprime_example2(example2_code):
    c = example2_code
    assert c.n == 4 and c.k == 3
    assert c.check == Poly(c.ring, [G(2, -2), G(4, -1), G(3, 1), 1])


def test_multiprime_other_length():
    c = build_multiprime_code([5, 13], 2)
    assert c.n == 12
    e = c.ring.neg(c.gen[0])
    assert c.ring.multiplicative_order(e) == 12


def test_builder_errors():
    with pytest.raises(InvalidPrime):
        build_quarter_code(7)
    with pytest.raises(InvalidPrime):
        build_half_code(11)
    with pytest.raises(WrongModulusShape):
        build_multiprime_code([5])
    with pytest.raises(IdentityViolation):
        build_half_code(5, roots=[2, 4])
    with pytest.raises(IdentityViolation):
        build_multiprime_code([5, 13], 1, root=G(2, 0))


def test_generator_matrices(example1_code, example2_code):
    G1 = generator_matrix(example1_code)
    assert len(G1) == 8 and all(len(r) == 10 for r in G1)
    assert G1[0] == [G(-2, 1), G(1, -2), G(1, 0)] + [G(0, 0)] * 7
    assert G1[7] == [G(0, 0)] * 7 + [G(-2, 1), G(1, -2), G(1, 0)]
    G2 = generator_matrix(example2_code)
    assert G2 == [
        [G(-3, -1), G(1, 0), G(0, 0), G(0, 0)],
        [G(0, 0), G(-3, -1), G(1, 0), G(0, 0)],
        [G(0, 0), G(0, 0), G(-3, -1), G(1, 0)],
    ]


def test_parity_check_matrices(example2_code):
    assert parity_check_matrix(example2_code) == [[G(1, 0), G(3, 1), G(4, -1), G(2, -2)]]


@pytest.mark.parametrize("code", all_codes(), ids=lambda c: f"{c.ring.delta}-n{c.n}")
def test_identities(code):
    assert code.gen.is_monic()
    assert code.gen.degree + code.check.degree == code.n
    assert identity_violations(code) == []


@pytest.mark.parametrize("code", all_codes()[:9], ids=lambda c: f"{c.ring.delta}-n{c.n}")
def test_constacyclic_shift_closure(code):
    rng = random.Random(7)
    elems = code.ring.elements()
    for _ in range(20):
        c = encode(code, [rng.choice(elems) for _ in range(code.k)])
        shifted = [code.ring.mul(code.lam, c[-1])] + c[:-1]
        assert is_codeword(code, shifted)


def test_encode(example1_code):
    c = example1_code
    rows = generator_matrix(c)
    unit = [G(1, 0)] + [G(0, 0)] * 7
    assert encode(c, unit) == rows[0]
    assert encode(c, [G(0, 0)] * 8) == [G(0, 0)] * 10
    assert encode(c, [G(0, 0), G(1, 0)] + [G(0, 0)] * 6) == rows[1]
    with pytest.raises(ValueError):
        encode(c, [1, 2])


@pytest.mark.parametrize("idx", [0, 1, 2, 3, 6, 9])
def test_encode_is_message_times_G(idx):
    code = all_codes()[idx]
    R = code.ring
    rng = random.Random(idx)
    elems = R.elements()
    Gm = generator_matrix(code)
    for _ in range(5):
        m = [rng.choice(elems) for _ in range(code.k)]
        expected = []
        for j in range(code.n):
            acc = G(0, 0)
            for i in range(code.k):
                acc = R.add(acc, R.mul(m[i], Gm[i][j]))
            expected.append(acc)
        assert encode(code, m) == expected


def test_encode_injective(example1_code, example2_code):
    for code in (example1_code, example2_code):
        rng = random.Random(1)
        elems = code.ring.elements()
        for _ in range(1000):
            m1 = [rng.choice(elems) for _ in range(code.k)]
            m2 = [rng.choice(elems) for _ in range(code.k)]
            if m1 != m2:
                assert encode(code, m1) != encode(code, m2)


def test_is_codeword(example1_code):
    c = example1_code
    r = [G(-2, 1), G(1, -2), G(1, 0), G(0, 1)] + [G(0, 0)] * 6
    assert not is_codeword(c, r)
    assert is_codeword(c, [0] * 10)
    assert is_codeword(c, encode(c, [G(1, 1)] * 8))


def test_descriptor_round_trip(example2_code):
    d = example2_code.to_dict()
    assert d["gen"] == [[-3, -1], [1, 0]]
    assert d["lambda"] == [1, 0]
    assert ConstacyclicCode.from_dict(d) == example2_code
    bad = dict(d, check=[[2, -2], [4, -1], [3, 2], [1, 0]])
    with pytest.raises(IdentityViolation):
        ConstacyclicCode.from_dict(bad)
    non_monic = dict(d, gen=[[-3, -1], [2, 0]])
    non_monic.pop("check")
    with pytest.raises(IdentityViolation):
        ConstacyclicCode.from_dict(non_monic)


def test_example1_generator_row_has_zero_divisor(example1_code):
    # 1-2i = -i(2+i) is a zero divisor modulo (2+i)^2; only monicity is guaranteed
    assert not example1_code.ring.is_unit(G(1, -2))
    assert generator_matrix(example1_code)[0][1] == G(1, -2)


def test_printed_example_H_entry_breaks_orthogonality(example1_code):
    # the worked example prints -1+i at H[0][7]; with it, rows 5..7 of G are not orthogonal
    ring = example1_code.ring
    H = parity_check_matrix(example1_code)
    assert H[0][7] == G(-1, 2)
    printed = list(H[0])
    printed[7] = ring.elem(G(-1, 1))
    dots = []
    for row in generator_matrix(example1_code):
        acc = G(0, 0)
        for a, b in zip(row, printed):
            acc = ring.add(acc, ring.mul(a, b))
        dots.append(acc)
    assert [i for i, d in enumerate(dots) if d != G(0, 0)] == [5, 6, 7]
