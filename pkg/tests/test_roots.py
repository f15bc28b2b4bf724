"""Root systems, the Weyl dimension formula and Casimir scalars."""

from fractions import Fraction

import pytest

from nullvar.roots import (
    UnsupportedTypeError,
    build_root_datum,
    casimir_eigenvalue,
    dim_gamma_two_rho,
    dominance_check,
    parse_type_label,
    two_rho,
    weyl_dim,
)


def test_a2_positive_roots():
    rd = build_root_datum("A", 2)
    assert rd.positive_roots == ((1, 0), (0, 1), (1, 1))
    assert rd.rho_root == (Fraction(1), Fraction(1))
    assert (rd.g, rd.l, rd.d) == (8, 2, 5)


def test_c2_positive_roots():
    rd = build_root_datum("C", 2)
    assert rd.positive_roots == ((1, 0), (0, 1), (1, 1), (2, 1))
    assert (rd.g, rd.l, rd.d) == (10, 2, 6)


def test_a1_bookkeeping():
    rd = build_root_datum("A", 1)
    assert rd.positive_roots == ((1,),)
    assert (rd.g, rd.l, rd.d) == (3, 1, 2)


@pytest.mark.parametrize(
    "family,rank,n_pos",
    [("A", 3, 6), ("B", 2, 4), ("B", 3, 9), ("C", 3, 9), ("D", 3, 6), ("G", 2, 6)],
)
def test_positive_root_counts(family, rank, n_pos):
    rd = build_root_datum(family, rank)
    assert rd.n_positive == n_pos
    assert rd.g == rd.rank + 2 * n_pos


def test_killing_normalization_on_adjoint():
    for family, rank in [("A", 1), ("A", 2), ("C", 2), ("B", 3), ("D", 3), ("G", 2)]:
        rd = build_root_datum(family, rank)
        theta = rd.highest_root
        shifted = tuple(t + 2 * r for t, r in zip(theta, rd.rho_root))
        assert rd.inner(theta, shifted) == 1
        assert casimir_eigenvalue(rd, rd.adjoint_weight()) == 1


def test_every_positive_root_decomposes():
    for family, rank in [("A", 2), ("C", 2), ("B", 3), ("G", 2)]:
        rd = build_root_datum(family, rank)
        pos = set(rd.positive_roots)
        for root in rd.positive_roots:
            if sum(root) == 1:
                continue
            assert any(
                tuple(r - a for r, a in zip(root, alpha)) in pos for alpha in pos if alpha != root
            )


def test_weyl_dim_values():
    a2 = build_root_datum("A", 2)
    assert weyl_dim(a2, (2, 2)) == 27
    assert weyl_dim(a2, (1, 1)) == 8
    c2 = build_root_datum("C", 2)
    # direct product over the 4 positive roots, as an inline second route:
    # ((a+1)(b+1)(a+b+2)(a+2b+3))/6 at (2,1) gives 3*2*5*7/6 = 35
    assert weyl_dim(c2, (2, 1)) == 35
    assert 3 * 2 * 5 * 7 // 6 == 35
    assert weyl_dim(c2, (2, 2)) == 81
    assert 3 * 3 * 6 * 9 // 6 == 81


def test_weyl_dim_trivial_and_adjoint():
    for family, rank in [("A", 1), ("A", 2), ("C", 2), ("B", 3), ("D", 3)]:
        rd = build_root_datum(family, rank)
        assert weyl_dim(rd, (0,) * rank) == 1
        assert weyl_dim(rd, rd.adjoint_weight()) == rd.g


def test_dim_gamma_two_rho():
    assert dim_gamma_two_rho(build_root_datum("A", 1)) == 3
    assert dim_gamma_two_rho(build_root_datum("A", 2)) == 27
    assert dim_gamma_two_rho(build_root_datum("C", 2)) == 81


def test_casimir_values():
    a2 = build_root_datum("A", 2)
    assert casimir_eigenvalue(a2, (1, 1)) == 1
    assert casimir_eigenvalue(a2, (2, 2)) == Fraction(8, 3)
    assert casimir_eigenvalue(a2, (0, 0)) == 0
    c2 = build_root_datum("C", 2)
    assert casimir_eigenvalue(c2, (0, 0)) == 0


def test_dominance():
    a2 = build_root_datum("A", 2)
    assert dominance_check(a2, (1, 1), (2, 2))
    # (2,2) - (3,0) expressed over the simple roots is (0, 1)
    assert dominance_check(a2, (3, 0), (2, 2))
    assert dominance_check(a2, (2, 2), (2, 2))
    assert not dominance_check(a2, (2, 2), (1, 1))


def test_casimir_below_top_on_window_weights():
    # weights of the degree-2 decompositions: all dominated by twice the Weyl
    # vector with strictly smaller Casimir scalar
    cases = {
        ("A", 2): [(1, 1), (3, 0), (0, 3)],
        ("C", 2): [(2, 0), (2, 1)],
        ("B", 3): [(0, 1, 0), (1, 0, 2)],
        ("D", 3): [(0, 1, 1), (1, 0, 2), (1, 2, 0)],
    }
    for (family, rank), weights in cases.items():
        rd = build_root_datum(family, rank)
        top = two_rho(rd)
        c_top = casimir_eigenvalue(rd, top)
        for weight in weights:
            assert dominance_check(rd, weight, top)
            assert casimir_eigenvalue(rd, weight) < c_top


def test_unsupported_types():
    with pytest.raises(UnsupportedTypeError):
        build_root_datum("Z", 9)
    with pytest.raises(UnsupportedTypeError):
        build_root_datum("D", 2)
    with pytest.raises(UnsupportedTypeError):
        build_root_datum("B", 1)
    with pytest.raises(UnsupportedTypeError):
        parse_type_label("Q")


def test_root_datum_json():
    rd = build_root_datum("A", 2)
    data = rd.to_json()
    assert data == {
        "type": "A2",
        "g": 8,
        "l": 2,
        "d": 5,
        "positive_roots": [[1, 0], [0, 1], [1, 1]],
    }
