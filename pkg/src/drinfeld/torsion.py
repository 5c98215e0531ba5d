"""Torsion modules of a Drinfeld module, Frobenius matrices, and norms.

E[l^n] is materialized inside the minimal splitting extension, certified
free of rank r over A/l^n by an explicit basis, and carries a lookup table
from points to coordinates so Galois actions become matrix extractions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .dmodule import DrinfeldModule
from .errors import (CapExceeded, CharacteristicIdeal, InsufficientModulus,
                     NotFound)
from .finitefield import extension_of
from .ore import ore_eval, ore_kernel, ore_splitting_degree, separable_part
from .upoly import UPoly, upoly_crt, upoly_gcd, upoly_irreducible

_TORSION_CACHE: dict = {}
BASIS_RETRY_LIMIT = 100


def _residue_list(constants, width: int):
    """All polynomials of degree < width over the constants field."""
    out = []
    for k in range(constants.size ** width):
        digits = []
        kk = k
        for _ in range(width):
            digits.append(constants.from_encoding(kk % constants.size))
            kk //= constants.size
        out.append(UPoly(constants, digits))
    return out


class TorsionModule:
    """E[l^n] with a certified A/l^n-basis of size r."""

    __slots__ = ("module", "ell", "n", "ext", "embedding", "points", "basis",
                 "residues", "coords", "_phi_t_ext", "_scalars")

    def __init__(self, module, ell, n, ext, embedding, points, basis,
                 residues, coords, phi_t_ext, scalars):
        self.module = module
        self.ell = ell
        self.n = n
        self.ext = ext
        self.embedding = embedding
        self.points = points
        self.basis = basis
        self.residues = residues
        self.coords = coords
        self._phi_t_ext = phi_t_ext
        self._scalars = scalars

    @property
    def modulus(self) -> UPoly:
        return self.ell ** self.n

    def t_action(self, x):
        return ore_eval(self._phi_t_ext, x)

    def scalar_action(self, rep: UPoly, x):
        """Apply the operator of a residue representative to a torsion point."""
        width = self.n * self.ell.deg
        w = x
        acc = self.ext.zero
        for k in range(width):
            c = rep.coeff(k)
            if c:
                acc = acc + self._scalars[c.encode()] * w
            if k + 1 < width:
                w = self.t_action(w)
        return acc

    def coordinates(self, x):
        return self.coords[x]

    def frobenius_matrix(self):
        """Matrix of x -> x^|L| on the basis, entries in A/l^n."""
        Q = self.module.L.size
        cols = [self.coords[b ** Q] for b in self.basis]
        return tuple(tuple(cols[j][i] for j in range(len(cols)))
                     for i in range(len(self.basis)))

    def t_matrix(self):
        cols = [self.coords[self.t_action(b)] for b in self.basis]
        return tuple(tuple(cols[j][i] for j in range(len(cols)))
                     for i in range(len(self.basis)))

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return (f"TorsionModule(l={self.ell.to_text()}, n={self.n}, "
                f"|points|={len(self.points)})")


def matrix_det_mod(matrix, modulus: UPoly) -> UPoly:
    """Determinant over A/(modulus) by Laplace expansion (small sizes)."""
    r = len(matrix)
    if r == 1:
        return matrix[0][0] % modulus
    base = modulus.base
    total = UPoly.zero(base)
    for j in range(r):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        minor = tuple(tuple(row[:j] + row[j + 1:]) for row in matrix[1:])
        term = (entry * matrix_det_mod(minor, modulus)) % modulus
        total = total - term if j % 2 else total + term
    return total % modulus


def _validate_ell(E: DrinfeldModule, ell: UPoly):
    if ell.base != E.constants:
        raise ValueError("l must be a polynomial over the constants field")
    if not ell.is_monic() or not upoly_irreducible(ell):
        raise ValueError("l must be monic irreducible")
    if ell == E.char_poly:
        raise CharacteristicIdeal(
            f"l = {ell.to_text()} is the characteristic ideal")


def dm_torsion(E: DrinfeldModule, ell: UPoly, n: int, cap: int = 12,
               seed: int = 0) -> TorsionModule:
    """The module E[l^n] in its splitting extension, with basis and coordinates."""
    _validate_ell(E, ell)
    if n < 1:
        raise ValueError("torsion exponent must be >= 1")
    key = (E.cache_key(), ell, n, seed)
    cached = _TORSION_CACHE.get(key)
    if cached is not None:
        if cached.ext.n // E.L.n > cap:
            raise CapExceeded(
                f"splitting degree {cached.ext.n // E.L.n} exceeds {cap}")
        return cached

    lam = ell ** n
    phi_lam = E.phi(lam)
    try:
        m = ore_splitting_degree(phi_lam, cap, seed)
    except NotFound as exc:
        raise CapExceeded(
            f"splitting degree of E[{lam.to_text()}] exceeds {cap}") from exc
    ext, emb = extension_of(E.L, m, seed)
    kernel = ore_kernel(phi_lam, ext)
    points = kernel.points

    width = n * ell.deg
    residues = tuple(_residue_list(E.constants, width))
    phi_t_ext = E.phi_t.map_field(emb)
    scalars = {c.encode(): emb(E.constant_action(c))
               for c in E.constants.elements()}

    rng = random.Random(seed)
    basis: list = []
    span = {ext.zero: ()}
    tries = 0
    while len(basis) < E.r:
        tries += 1
        if tries > BASIS_RETRY_LIMIT:
            raise NotFound(BASIS_RETRY_LIMIT,
                           "basis sampling failed to certify freeness")
        z = rng.choice(points)
        # orbit of z under all residue representatives
        w_chain = [z]
        for _ in range(width - 1):
            w_chain.append(ore_eval(phi_t_ext, w_chain[-1]))
        table = []
        for rep in residues:
            acc = ext.zero
            for k in range(width):
                c = rep.coeff(k)
                if c:
                    acc = acc + scalars[c.encode()] * w_chain[k]
            table.append(acc)
        new_span = {}
        clash = False
        for pt, coord in span.items():
            for idx, v in enumerate(table):
                npt = pt + v
                if npt in new_span:
                    clash = True
                    break
                new_span[npt] = coord + (idx,)
            if clash:
                break
        if clash:
            continue
        basis.append(z)
        span = new_span

    if len(span) != len(points):  # pragma: no cover - freeness guarantees this
        raise NotFound(BASIS_RETRY_LIMIT, "span does not exhaust the kernel")
    coords = {pt: tuple(residues[i] for i in idxs)
              for pt, idxs in span.items()}
    T = TorsionModule(E, ell, n, ext, emb, points, tuple(basis), residues,
                      coords, phi_t_ext, scalars)
    _TORSION_CACHE[key] = T
    return T


def dm_frobenius_matrix(T: TorsionModule):
    """Matrix of the base-field Frobenius on T's basis; must be invertible."""
    m = T.frobenius_matrix()
    det = matrix_det_mod(m, T.modulus)
    if upoly_gcd(det, T.ell).deg != 0:
        raise RuntimeError("Frobenius matrix is singular modulo l")
    return m


def torsion_point_count(E: DrinfeldModule, a: UPoly, cap: int = 12,
                        seed: int = 0):
    """|E[a]| and the extension degree where it is attained.

    Works for any nonzero a, including powers of the characteristic ideal:
    the inseparable layer is stripped before the splitting search.
    """
    phi_a = E.phi(a)
    g, _ = separable_part(phi_a)
    if g.deg == 0:
        return 1, 1
    m = ore_splitting_degree(g, cap, seed)
    return E.p ** g.deg, m


# ---------------------------------------------------------------------------
# Frobenius norms

@dataclass(frozen=True)
class FrobeniusReport:
    """Reconstruction of the Frobenius determinant as an element of F_q[t]."""

    place: UPoly | None
    d: int
    residues: tuple  # of (ell, n, matrix, det) entries
    s_exact: UPoly
    s_monic: UPoly
    independence: bool
    degree_ok: bool
    char_divides: bool
    char_power: int | None = field(default=None)

    @property
    def all_ok(self):
        return self.independence and self.degree_ok and self.char_divides

    def ells_text(self):
        return ";".join(f"{ell.to_text()}^{n}" if n > 1 else ell.to_text()
                        for ell, n, _, _ in self.residues)

    def to_dict(self):
        return {
            "place": self.place.to_text("x") if self.place is not None else None,
            "d": self.d,
            "primes": [{"ell": ell.to_text(), "n": n,
                        "det": det.to_text()}
                       for ell, n, _, det in self.residues],
            "s": self.s_exact.to_text(),
            "s_monic": self.s_monic.to_text(),
            "independence": self.independence,
            "degree_ok": self.degree_ok,
            "char_divides": self.char_divides,
            "char_power": self.char_power,
        }

    def csv_row(self):
        return [
            self.place.to_text("x") if self.place is not None else "",
            str(self.d),
            self.ells_text(),
            self.s_exact.to_text(),
            str(self.independence).lower(),
            str(self.degree_ok).lower(),
            str(self.char_divides).lower(),
        ]

    CSV_HEADER = ("place", "d", "ells", "s", "independence", "deg_check",
                  "char_divides_check")


def _crt_lift(entries, d: int, q: int):
    """Degree-d element from residues; entries are (det, modulus) pairs."""
    total = sum(m.deg for _, m in entries)
    if total < d:
        raise InsufficientModulus(
            f"combined modulus degree {total} < place degree {d}")
    rep = upoly_crt([(v, m) for v, m in entries])
    if total == d:
        if q != 2:
            raise InsufficientModulus(
                "degree-d modulus pins the lift only over F_2")
        big = entries[0][1]
        for _, m in entries[1:]:
            big = big * m
        return rep + big
    return rep


def dm_frobenius_norm(E: DrinfeldModule, primes, cap: int = 12, seed: int = 0,
                      place: UPoly | None = None) -> FrobeniusReport:
    """Determinants of Frobenius on each E[l^n], CRT-assembled into F_q[t].

    primes: list of (l, n) with distinct monic irreducible l, none equal to
    the characteristic ideal.
    """
    seen = set()
    for ell, n in primes:
        _validate_ell(E, ell)
        if ell in seen:
            raise ValueError("repeated prime in reconstruction set")
        seen.add(ell)
    d = E.d
    entries = []
    residues = []
    for ell, n in primes:
        T = dm_torsion(E, ell, n, cap=cap, seed=seed)
        mat = dm_frobenius_matrix(T)
        det = matrix_det_mod(mat, T.modulus)
        residues.append((ell, n, mat, det))
        entries.append((det, ell ** n))

    s = _crt_lift(entries, d, E.q)
    degree_ok = s.deg == d
    char_divides = not E.delta(s)

    total = sum(m.deg for _, m in entries)
    independence = True
    if total > d:
        indices = range(len(entries))
        for mask in range(1, 1 << len(entries)):
            subset = [entries[i] for i in indices if mask >> i & 1]
            sub_total = sum(m.deg for _, m in subset)
            if sub_total <= d:
                continue
            if upoly_crt([(v, m) for v, m in subset]) != s:
                independence = False
                break

    char_power = None
    if degree_ok:
        mono = s.monic()
        power = 0
        probe = mono
        while probe.deg >= E.char_poly.deg and (probe % E.char_poly).is_zero():
            probe = probe // E.char_poly
            power += 1
        if probe.deg == 0 and power > 0:
            char_power = power

    return FrobeniusReport(place=place, d=d, residues=tuple(residues),
                           s_exact=s, s_monic=s.monic(),
                           independence=independence, degree_ok=degree_ok,
                           char_divides=char_divides, char_power=char_power)


def _product(entries):
    acc = entries[0][1]
    for _, m in entries[1:]:
        acc = acc * m
    return acc
