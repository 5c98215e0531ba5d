"""Matrix presentation of the module of additive morphisms attached to a
Drinfeld module, its rank-1 exterior determinant, and the torsion-side
verification that the two constructions agree.

The operator acts on column vectors over L[t] as v -> M * sigma(v), where
sigma raises coefficients to the q-th power and fixes t.  In the companion
basis the matrix determinant has t-degree exactly 1 with root theta; the
scalar in front transports to the rank-1 module below.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dmodule import DrinfeldModule
from .torsion import dm_frobenius_matrix, dm_torsion, matrix_det_mod
from .upoly import UPoly


@dataclass(frozen=True)
class MotiveMatrix:
    """Companion-basis matrix of the semilinear operator, entries in L[t]."""

    module: DrinfeldModule
    entries: tuple  # r x r rows of UPoly over L

    @property
    def size(self):
        return self.module.r

    def sigma(self, poly: UPoly) -> UPoly:
        """Coefficient q-power twist, fixing t."""
        q_exp = self.module.e
        return poly.map_coeffs(lambda c: c.p_power(q_exp))

    def apply(self, vector):
        """One application of the operator to a vector of L[t]-polynomials."""
        twisted = [self.sigma(v) for v in vector]
        return tuple(
            sum((row[j] * twisted[j] for j in range(self.size)),
                UPoly.zero(self.entries[0][0].base))
            for row in self.entries)

    def det(self) -> UPoly:
        return _det(self.entries, self.module.L)


def _det(rows, L):
    r = len(rows)
    if r == 1:
        return rows[0][0]
    total = UPoly.zero(L)
    for j in range(r):
        entry = rows[0][j]
        if entry.is_zero():
            continue
        minor = tuple(tuple(row[:j] + row[j + 1:]) for row in rows[1:])
        term = entry * _det(minor, L)
        total = total - term if j % 2 else total + term
    return total


@dataclass(frozen=True)
class DetMotive:
    """Rank-1 determinant data: the operator is c*(t - theta) twisted by sigma."""

    module: DrinfeldModule
    unit: object          # nonzero FFElem c
    factor: UPoly         # t - theta


def motive_matrix(E: DrinfeldModule) -> MotiveMatrix:
    """Companion matrix in the basis (1, tau^e, ..., tau^(e(r-1)))."""
    L = E.L
    r = E.r
    lead_inv = E.coeffs[-1].inverse()
    t_minus_theta = UPoly(L, [-E.theta, L.one])
    rows = []
    for i in range(r):
        row = []
        for j in range(r):
            if j == r - 1:
                if i == 0:
                    row.append(t_minus_theta * lead_inv)
                else:
                    row.append(UPoly(L, [-(lead_inv * E.coeffs[i - 1])]))
            elif i == j + 1:
                row.append(UPoly.one(L))
            else:
                row.append(UPoly.zero(L))
        rows.append(tuple(row))
    return MotiveMatrix(module=E, entries=tuple(rows))


def motive_det(E: DrinfeldModule) -> DetMotive:
    """Determinant of the companion matrix; degree 1 in t with root theta."""
    M = motive_matrix(E)
    det = M.det()
    if det.deg != 1:
        raise RuntimeError("determinant is not linear in t")
    unit = det.leading()
    factor = det * unit.inverse()
    if factor.eval(E.theta):
        raise RuntimeError("determinant root differs from theta")
    return DetMotive(module=E, unit=unit, factor=factor)


def det_drinfeld(E: DrinfeldModule) -> DrinfeldModule:
    """The rank-1 module whose matrix presentation realizes the determinant."""
    c = motive_det(E).unit
    return DrinfeldModule(E.L, E.theta, [c.inverse()],
                          constants=E.constants, twist=E.twist)


def verify_tate_det(E: DrinfeldModule, ell: UPoly, n: int, cap: int = 12,
                    seed: int = 0) -> bool:
    """Compare det(Frobenius on E[l^n]) with the Frobenius scalar of det E.

    Both sides are computed independently through the torsion machinery.
    """
    T = dm_torsion(E, ell, n, cap=cap, seed=seed)
    lhs = matrix_det_mod(dm_frobenius_matrix(T), T.modulus)
    D = det_drinfeld(E)
    TD = dm_torsion(D, ell, n, cap=cap, seed=seed)
    rhs = matrix_det_mod(dm_frobenius_matrix(TD), TD.modulus)
    return lhs == rhs
