import itertools

import pytest

from dp2.picard import (
    ZERO,
    DivClass,
    E,
    F,
    Family,
    H,
    K,
    L,
    canonical_class,
    classify,
    conic_through,
    cubic_with_node,
    enumerate_exceptional,
    format_divisor,
    intersect,
    line_through,
    parse_divisor,
)


def raw_intersect(a, b):
    # the diagonal form, written out independently of DivClass.dot
    return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))


def test_basis_self_intersections():
    assert intersect(L, L) == 1
    for i in range(1, 8):
        assert intersect(E(i), E(i)) == -1
        assert intersect(L, E(i)) == 0
    for i, j in itertools.combinations(range(1, 8), 2):
        assert intersect(E(i), E(j)) == 0


def test_hyperplane_numbers():
    assert H == 3 * L - sum((E(i) for i in range(1, 8)), ZERO)
    assert intersect(H, H) == 2
    for c in enumerate_exceptional():
        assert intersect(H, c.cls) == 1


def test_e1_dot_d1_from_expansion():
    # oracle: expand D1 = 3L - 2E1 - (E2 + ... + E7) and evaluate the raw form
    d1 = (3, -2, -1, -1, -1, -1, -1, -1)
    expected = raw_intersect(E(1).coeffs, d1)
    assert expected == 2
    assert intersect(E(1), cubic_with_node(1)) == expected


def test_canonical_class():
    assert canonical_class() == DivClass.of(-3, 1, 1, 1, 1, 1, 1, 1)
    assert intersect(K, K) == 9 - 7 == 2
    assert K + H == ZERO
    for c in enumerate_exceptional():
        assert intersect(K, c.cls) == -1


def test_intersect_symmetric_bilinear(rng, random_classes):
    for a, b, c in zip(*(random_classes(1000) for _ in range(3))):
        m, n = rng.randint(-4, 4), rng.randint(-4, 4)
        assert intersect(a, b) == intersect(b, a)
        assert intersect(m * a + n * b, c) == m * intersect(a, c) + n * intersect(b, c)
        assert intersect(a, b) == raw_intersect(a.coeffs, b.coeffs)


def test_census_counts_and_families():
    curves = enumerate_exceptional()
    assert len(curves) == 56
    assert len({c.cls for c in curves}) == 56
    by_family = {fam: [c for c in curves if c.family is fam] for fam in Family}
    assert [len(by_family[f]) for f in (Family.E, Family.L, Family.C, Family.D)] == [7, 21, 21, 7]
    for c in curves:
        assert c.cls.selfint == -1
        assert intersect(c.cls, H) == 1


def test_census_family_closed_forms():
    curves = enumerate_exceptional()
    expected = [E(i).coeffs for i in range(1, 8)]
    expected += [(L - E(i) - E(j)).coeffs for i, j in itertools.combinations(range(1, 8), 2)]
    expected += [(2 * L - sum((E(k) for k in range(1, 8) if k not in (i, j)), ZERO)).coeffs
                 for i, j in itertools.combinations(range(1, 8), 2)]
    expected += [(3 * L - 2 * E(i) - sum((E(k) for k in range(1, 8) if k != i), ZERO)).coeffs
                 for i in range(1, 8)]
    assert [c.cls.coeffs for c in curves] == expected


def brute_force_box_scan():
    # exhaustive scan of |d| <= 4, |mi| <= 3 for D.D = -1, D.H = 1; the last
    # coordinate is solved from the linear degree equation, which discards
    # exactly the box points failing D.H = 1
    found = set()
    for d in range(-4, 5):
        for ms in itertools.product(range(-3, 4), repeat=6):
            m7 = 1 - 3 * d - sum(ms)
            if not -3 <= m7 <= 3:
                continue
            if d * d - sum(m * m for m in ms) - m7 * m7 == -1:
                found.add((d, *ms, m7))
    return found


def test_census_equals_brute_force_scan():
    assert {c.cls.coeffs for c in enumerate_exceptional()} == brute_force_box_scan()


def test_census_closed_under_bitangent_pairing():
    classes = {c.cls for c in enumerate_exceptional()}
    for c in classes:
        assert H - c in classes


def test_classify_examples():
    lij = classify(DivClass.of(1, -1, -1, 0, 0, 0, 0, 0))
    assert lij is not None and lij.family is Family.L and lij.indices == (1, 2)
    assert classify(H) is None
    # oracle: expand 2L - sum(Ek, k != 1, 2)
    cij = classify(DivClass.of(2, 0, 0, -1, -1, -1, -1, -1))
    assert cij is not None and cij.family is Family.C and cij.indices == (1, 2)
    assert classify(ZERO) is None
    for c in enumerate_exceptional():
        assert classify(c.cls) == c


def test_curve_names():
    assert classify(E(3)).name == "E3"
    assert classify(line_through(2, 5)).name == "L25"
    assert classify(conic_through(1, 7)).name == "C17"
    assert classify(cubic_with_node(6)).name == "D6"


def test_parse_raw_vector():
    assert parse_divisor("3,-1,-1,-1,-1,-1,-1,-1") == H
    assert parse_divisor(" 0,0,0,0,0,0,0,0 ") == ZERO
    with pytest.raises(ValueError):
        parse_divisor("1,2,3")
    with pytest.raises(ValueError):
        parse_divisor("1,2,3,x,5,6,7,8")


def test_parse_symbolic():
    assert parse_divisor("H") == H
    assert parse_divisor("K") == K
    assert parse_divisor("-H") == -H
    assert parse_divisor("2H-3E1+L23") == 2 * H - 3 * E(1) + line_through(2, 3)
    assert parse_divisor("F") == E(1) + line_through(1, 2)
    assert parse_divisor("F-H") == F - H
    assert parse_divisor(" L 2 1 ") == line_through(1, 2)  # whitespace and index order
    assert parse_divisor("C67-E5") == conic_through(6, 7) - E(5)
    assert parse_divisor("D7") == cubic_with_node(7)
    assert parse_divisor("0") == ZERO
    assert parse_divisor("3*H") == 3 * H


@pytest.mark.parametrize("bad", ["", "Q1", "E8", "E12", "L1", "L11", "D12", "2", "H+"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_divisor(bad)


def test_str_round_trip(random_classes):
    for d in random_classes(200):
        assert parse_divisor(str(d)) == d


def test_format_divisor():
    assert format_divisor(H) == "H"
    assert format_divisor(E(1) + line_through(1, 2)) == "F"
    assert format_divisor(conic_through(1, 2)) == "C12"
    assert format_divisor(ZERO) == "0"
    assert format_divisor(E(1) - E(2)) == "E1-E2"
