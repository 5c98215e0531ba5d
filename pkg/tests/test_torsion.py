import pytest

from drinfeld import (DrinfeldModule, OrePoly, UPoly, dm_frobenius_matrix,
                      dm_frobenius_norm, dm_torsion, ore_eval, parse_upoly,
                      torsion_point_count)
from drinfeld.errors import (CapExceeded, CharacteristicIdeal,
                             InsufficientModulus)
from drinfeld.torsion import matrix_det_mod


def _mat_mul_mod(a, b, mod):
    n = len(a)
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(n)),
                           UPoly.zero(mod.base)) % mod
                       for j in range(n)) for i in range(n))


def test_carlitz_t_torsion(F2, F4, carlitz_f4):
    T = dm_torsion(carlitz_f4, UPoly.x(F2), 1)
    assert [x.encode() for x in T.points] == [0, F4.gen.encode()]
    assert len(T.basis) == 1
    assert T.ext == F4


def test_carlitz_frobenius_matrix_is_identity(F2, F4, carlitz_f4):
    T = dm_torsion(carlitz_f4, UPoly.x(F2), 1)
    m = dm_frobenius_matrix(T)
    assert m == ((UPoly.one(F2),),)
    T2 = dm_torsion(carlitz_f4, UPoly.x(F2) + 1, 1)
    assert dm_frobenius_matrix(T2) == ((UPoly.one(F2),),)
    assert [x.encode() for x in T2.points] == [0, (F4.gen ** 2).encode()]


def test_characteristic_ideal_rejected(F2, carlitz_f4):
    with pytest.raises(CharacteristicIdeal):
        dm_torsion(carlitz_f4, parse_upoly("t^2+t+1", F2), 1)


def test_kernel_at_characteristic_is_trivial(F2, carlitz_f4):
    char = parse_upoly("t^2+t+1", F2)
    assert carlitz_f4.phi(char) == OrePoly(carlitz_f4.L, [0, 0, 1])
    count, _ = torsion_point_count(carlitz_f4, char)
    assert count == 1
    assert count < carlitz_f4.q ** (carlitz_f4.r * char.deg)


def test_torsion_cardinality_law(F2, carlitz_f4, rank2_f2):
    for E, ell_text, n in [(carlitz_f4, "t", 1), (carlitz_f4, "t", 2),
                           (rank2_f2, "t", 1), (rank2_f2, "t", 2)]:
        ell = parse_upoly(ell_text, F2)
        T = dm_torsion(E, ell, n, cap=12)
        assert len(T.points) == E.q ** (E.r * n * ell.deg)
        assert len(T.basis) == E.r


def test_coprime_point_count(F2, carlitz_f4):
    a = UPoly.x(F2) * (UPoly.x(F2) + 1)
    count, _ = torsion_point_count(carlitz_f4, a, cap=12)
    assert count == carlitz_f4.q ** (carlitz_f4.r * a.deg)


def test_basis_annihilator_exact(F2, rank2_f2):
    ell = UPoly.x(F2)
    T = dm_torsion(rank2_f2, ell, 2, cap=12)
    lam = ell ** 2
    for b in T.basis:
        assert not ore_eval(rank2_f2.phi(lam).map_field(T.embedding), b)
        assert ore_eval(rank2_f2.phi(ell).map_field(T.embedding), b)


def test_frobenius_commutes_with_t_action(F2, carlitz_f4, rank2_f2):
    for E, ell_text, n in [(carlitz_f4, "t", 2), (rank2_f2, "t", 1)]:
        T = dm_torsion(E, parse_upoly(ell_text, F2), n, cap=12)
        frob = T.frobenius_matrix()
        tmat = T.t_matrix()
        mod = T.modulus
        assert _mat_mul_mod(frob, tmat, mod) == _mat_mul_mod(tmat, frob, mod)


def test_carlitz_norm_reconstruction(F2, carlitz_f4):
    t = UPoly.x(F2)
    rep = dm_frobenius_norm(carlitz_f4, [(t, 1), (t + 1, 1)])
    assert rep.s_exact == parse_upoly("t^2+t+1", F2)
    assert rep.independence and rep.degree_ok and rep.char_divides
    assert rep.char_power == 1
    assert not carlitz_f4.delta(rep.s_exact)


def test_norm_residue_consistency(F2, carlitz_f4):
    t = UPoly.x(F2)
    rep = dm_frobenius_norm(carlitz_f4, [(t, 1), (t + 1, 1)])
    for ell, n, _, det in rep.residues:
        assert rep.s_exact % (ell ** n) == det


def test_rank2_norm_degree_one(F2, rank2_f2):
    t = UPoly.x(F2)
    rep = dm_frobenius_norm(rank2_f2, [(t, 1), (parse_upoly("t^2+t+1", F2), 1)],
                            cap=20)
    assert rep.s_exact.deg == 1
    assert rep.s_monic == t + 1  # the characteristic ideal
    assert rep.all_ok


def test_norm_requires_enough_modulus(F3):
    E = DrinfeldModule(F3, F3.one, [F3.one])
    t = UPoly.x(F3)
    # q = 3 and total degree d: the lift is ambiguous
    with pytest.raises(InsufficientModulus):
        dm_frobenius_norm(E, [(t, 1)])


def test_norm_rejects_repeated_prime(F2, carlitz_f4):
    t = UPoly.x(F2)
    with pytest.raises(ValueError):
        dm_frobenius_norm(carlitz_f4, [(t, 1), (t, 2)])


def test_cap_exceeded_surfaces(F2, rank2_f2):
    with pytest.raises(CapExceeded):
        dm_torsion(rank2_f2, parse_upoly("t^2+t+1", F2), 1, cap=5)


def test_determinant_helper(F2):
    t = UPoly.x(F2)
    mod = t ** 3
    one, zero = UPoly.one(F2), UPoly.zero(F2)
    m = ((t % mod, one), (one, zero))
    assert matrix_det_mod(m, mod) == (t * zero - one * one) % mod


def test_points_closed_under_module_actions(F2, carlitz_f4):
    T = dm_torsion(carlitz_f4, UPoly.x(F2), 2, cap=12)
    points = set(T.points)
    for x in T.points:
        assert T.t_action(x) in points
        for c in carlitz_f4.constants.elements():
            assert T.embedding(carlitz_f4.constant_action(c)) * x in points


def test_torsion_determinism(F2, rank2_f2):
    t = UPoly.x(F2)
    a = dm_torsion(rank2_f2, t, 1, cap=12, seed=0)
    b = dm_torsion(rank2_f2, t, 1, cap=12, seed=0)
    assert a.basis == b.basis and a.points == b.points
