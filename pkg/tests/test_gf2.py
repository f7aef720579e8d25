import math
import random
from itertools import combinations

import pytest

from degstab.gf2 import (
    Embedding,
    FieldCtx,
    default_modulus,
    embed,
    find_embedding,
    is_irreducible,
    log_tables,
    make_ctx,
    parse_modulus,
    poly_mod,
    poly_mul,
    subfield_elements,
    verify_lin_indep_transfer,
)


def brute_irreducible(p):
    """Oracle: trial division by every lower-degree polynomial."""
    n = p.bit_length() - 1
    if n < 1:
        return False
    if not (p & 1):  # usable moduli must not have 0 as a root
        return False
    for q in range(2, 1 << n):
        if q.bit_length() - 1 >= 1 and poly_mod(p, q) == 0:
            return False
    return True


def test_irreducibility_matches_trial_division():
    for p in range(2, 1 << 9):
        assert is_irreducible(p) == brute_irreducible(p), p


def test_default_modulus_is_lex_smallest():
    # oracle: first irreducible in increasing integer order
    for n in range(1, 11):
        expected = next(p for p in range(1 << n, 1 << (n + 1)) if brute_irreducible(p))
        assert default_modulus(n) == expected


def test_default_modulus_n3():
    assert default_modulus(3) == 0b1011  # x^3 + x + 1


def test_default_modulus_n1():
    assert default_modulus(1) == 0b11  # x + 1 (x itself has root 0)


def test_reducible_modulus_rejected():
    # x^4 + x^2 + 1 = (x^2 + x + 1)^2
    with pytest.raises(ValueError):
        make_ctx(4, 0b10101)
    with pytest.raises(ValueError):
        make_ctx(4, 0b1011)  # degree mismatch


def test_mul_basics():
    ctx = make_ctx(3)
    for a in ctx.elements():
        assert ctx.mul(a, 1) == a
        assert ctx.mul(a, 0) == 0
    # x * x^2 = x^3 = x + 1 mod x^3+x+1
    assert ctx.mul(0b010, 0b100) == 0b011


def test_mul_matches_schoolbook():
    ctx = make_ctx(6)
    rng = random.Random(1)
    for _ in range(200):
        a, b = rng.randrange(64), rng.randrange(64)
        assert ctx.mul(a, b) == poly_mod(poly_mul(a, b), ctx.modulus)


def test_field_axioms_exhaustive_small():
    for n in (2, 3, 4):
        ctx = make_ctx(n)
        elems = list(ctx.elements())
        for a in elems:
            for b in elems:
                assert ctx.mul(a, b) == ctx.mul(b, a)
                for c in elems:
                    assert ctx.mul(a, ctx.mul(b, c)) == ctx.mul(ctx.mul(a, b), c)
                    assert ctx.mul(a, b ^ c) == ctx.mul(a, b) ^ ctx.mul(a, c)


def test_pow_conventions():
    ctx = make_ctx(5)
    assert ctx.pow(0, 0) == 1
    assert ctx.pow(0, 5) == 0
    for a in range(1, ctx.size):
        assert ctx.pow(a, ctx.order) == 1
    ctx3 = make_ctx(3)
    assert ctx3.pow(0b010, 7) == 1
    # oracle: repeated multiplication
    acc = 1
    for _ in range(5):
        acc = ctx3.mul(acc, 0b110)
    assert ctx3.pow(0b110, 5) == acc


def test_inverse():
    for n in range(1, 9):
        ctx = make_ctx(n)
        assert ctx.inv(0) == 0
        assert ctx.inv(1) == 1
        for a in range(1, ctx.size):
            assert ctx.mul(a, ctx.inv(a)) == 1
            assert ctx.inv(a) == ctx.pow(a, ctx.size - 2)


def test_trace_linear_and_balanced():
    for n in range(1, 9):
        ctx = make_ctx(n)
        assert ctx.trace(0) == 0
        assert ctx.trace(1) == n % 2
        ones = sum(ctx.trace(a) for a in ctx.elements())
        assert ones == 1 << (n - 1)
        rng = random.Random(n)
        for _ in range(50):
            a, b = rng.randrange(ctx.size), rng.randrange(ctx.size)
            assert ctx.trace(a ^ b) == ctx.trace(a) ^ ctx.trace(b)


def test_log_tables_consistent():
    ctx = make_ctx(7)
    exp, log = log_tables(ctx)
    for a in range(1, ctx.size):
        assert exp[log[a]] == a
    for a in range(1, ctx.size):
        for b in (3, 91, 127):
            assert exp[(log[a] + log[b]) % ctx.order] == ctx.mul(a, b)


def test_modulus_hex_roundtrip():
    ctx = make_ctx(8, 0x11B)
    assert ctx.modulus_hex() == "0x11B"
    assert parse_modulus(ctx.modulus_hex()) == 0x11B


def test_embedding_is_homomorphism():
    for n, u in [(2, 2), (3, 2), (4, 2), (5, 2), (3, 3)]:
        src = make_ctx(n)
        dst = make_ctx(n * u)
        e = find_embedding(src, dst)
        assert embed(e, 0) == 0
        assert embed(e, 1) == 1
        for a in src.elements():
            for b in src.elements():
                assert embed(e, a ^ b) == embed(e, a) ^ embed(e, b)
                assert embed(e, src.mul(a, b)) == dst.mul(embed(e, a), embed(e, b))


def test_embedding_validates_root():
    src = make_ctx(3)
    dst = make_ctx(6)
    with pytest.raises(ValueError):
        Embedding(src, dst, 1)  # 1 is not a root of x^3+x+1


def test_subfield_size():
    ctx = make_ctx(6)
    assert len(subfield_elements(ctx, 2)) == 4
    assert len(subfield_elements(ctx, 3)) == 8


def test_lin_indep_transfer_exhaustive_pairs():
    # every 2-tuple over GF(2^3), embedded into GF(2^6) over F_4
    for a, b in combinations(range(8), 2):
        assert verify_lin_indep_transfer(3, 2, [a, b])
    # include dependent tuples
    assert verify_lin_indep_transfer(3, 2, [3, 3])
    assert verify_lin_indep_transfer(3, 2, [0, 5])


def test_lin_indep_transfer_other_scopes():
    rng = random.Random(7)
    for _ in range(10):
        tup = [rng.randrange(1 << 5) for _ in range(3)]
        assert verify_lin_indep_transfer(5, 2, tup)
    for _ in range(10):
        tup = [rng.randrange(1 << 3) for _ in range(2)]
        assert verify_lin_indep_transfer(3, 4, tup)


def test_lin_indep_transfer_requires_coprime():
    with pytest.raises(ValueError):
        verify_lin_indep_transfer(4, 2, [1, 2])
