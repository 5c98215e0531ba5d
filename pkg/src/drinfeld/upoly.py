"""Univariate polynomials over a finite field.

UPoly doubles as the coefficient ring F_q[t] and as F_q[theta]; deg of the
zero polynomial is the -infinity sentinel so Euclidean contracts read
uniformly.
"""

from __future__ import annotations

import re

from .errors import (BoundExceeded, DivisionByZero, FieldMismatch,
                     NonCoprimeModuli, ParseError, ZeroPolynomial)
from .finitefield import FFElem, FField, FieldEmbedding, ff_embed

NEG_INF = float("-inf")


class UPoly:
    """Polynomial with FFElem coefficients, low-to-high, trailing zeros stripped."""

    __slots__ = ("base", "coeffs")

    def __init__(self, base: FField, coeffs):
        elems = []
        for c in coeffs:
            elems.append(c if isinstance(c, FFElem) else base.element(c))
        while elems and not elems[-1]:
            elems.pop()
        for c in elems:
            if c.field != base:
                raise FieldMismatch("coefficient outside the base field")
        self.base = base
        self.coeffs = tuple(elems)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, base):
        return cls(base, ())

    @classmethod
    def one(cls, base):
        return cls(base, (1,))

    @classmethod
    def x(cls, base):
        return cls(base, (0, 1))

    @classmethod
    def from_encoding(cls, base, k: int):
        """Polynomial whose coefficient vector is k written base |F|."""
        digits = []
        while k:
            digits.append(base.from_encoding(k % base.size))
            k //= base.size
        return cls(base, digits)

    # -- basic structure --------------------------------------------------------

    @property
    def deg(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.base.one

    def leading(self) -> FFElem:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant(self) -> FFElem:
        return self.coeffs[0] if self.coeffs else self.base.zero

    def coeff(self, i: int) -> FFElem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.base.zero

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        inv = self.leading().inverse()
        return UPoly(self.base, tuple(c * inv for c in self.coeffs))

    def encode(self) -> int:
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.base.size + c.encode()
        return k

    # -- ring operations --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UPoly):
            if other.base != self.base:
                raise FieldMismatch("polynomials over different fields")
            return other
        return UPoly(self.base, (other,))

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(self.base, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(self.base, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return UPoly(self.base, [-c for c in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return UPoly.zero(self.base)
        out = [self.base.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return UPoly(self.base, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = UPoly.one(self.base)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        if self.deg < other.deg:
            return UPoly.zero(self.base), self
        rem = list(self.coeffs)
        db = other.deg
        inv = other.leading().inverse()
        q = [self.base.zero] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                f = c * inv
                q[i - db] = f
                for j in range(db + 1):
                    rem[i - db + j] = rem[i - db + j] - f * other.coeffs[j]
        return UPoly(self.base, q), UPoly(self.base, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def shift(self, k: int) -> "UPoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return UPoly(self.base, (self.base.zero,) * k + self.coeffs)

    def derivative(self) -> "UPoly":
        return UPoly(self.base,
                     [self.coeffs[i] * i for i in range(1, len(self.coeffs))])

    def eval(self, x: FFElem) -> FFElem:
        """Horner evaluation; x may live in an extension of the base field."""
        if x.field == self.base:
            emb = None
        else:
            emb = ff_embed(self.base, x.field)
        acc = x.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + (emb(c) if emb else c)
        return acc

    def map_field(self, emb: FieldEmbedding) -> "UPoly":
        if emb.sub != self.base:
            raise FieldMismatch("embedding does not start at the base field")
        return UPoly(emb.sup, [emb(c) for c in self.coeffs])

    def map_coeffs(self, fn) -> "UPoly":
        return UPoly(self.base, [fn(c) for c in self.coeffs])

    # -- misc --------------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, FFElem)):
            try:
                other = self._coerce(other)
            except FieldMismatch:
                return False
        return (isinstance(other, UPoly) and other.base == self.base
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.base, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def to_lists(self):
        return [c.to_list() for c in self.coeffs]

    def to_text(self, var: str = "t") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if self.base.n == 1:
                cs = str(c.encode())
                unit = cs == "1"
            else:
                cs = "[" + ",".join(str(v) for v in c.coeffs) + "]"
                unit = c == self.base.one
            if i == 0:
                parts.append(cs)
            else:
                head = "" if unit else cs + "*"
                parts.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
        return "+".join(parts)

    def __repr__(self):
        return f"UPoly({self.to_text('x')})"


# ---------------------------------------------------------------------------
# gcd family

def upoly_xgcd(a: UPoly, b: UPoly):
    """(g, s, t) with s*a + t*b = g, g monic (or zero)."""
    base = a.base
    r0, r1 = a, b
    s0, s1 = UPoly.one(base), UPoly.zero(base)
    t0, t1 = UPoly.zero(base), UPoly.one(base)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = r0.leading().inverse()
    return r0 * inv, s0 * inv, t0 * inv


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def upoly_crt(residues) -> UPoly:
    """Unique representative below the product of pairwise-coprime moduli."""
    if not residues:
        raise ValueError("need at least one residue")
    x, modulus = residues[0][0] % residues[0][1], residues[0][1]
    for v, m in residues[1:]:
        g, s, _ = upoly_xgcd(modulus, m)
        if g.deg != 0:
            raise NonCoprimeModuli(f"moduli share a factor of degree {g.deg}")
        # x + modulus * s * (v - x) solves both congruences
        lift = (s * (v - x)) % m
        x = (x + modulus * lift) % (modulus * m)
        modulus = modulus * m
    return x


def upoly_powmod(a: UPoly, e: int, m: UPoly) -> UPoly:
    result = UPoly.one(a.base)
    base = a % m
    while e:
        if e & 1:
            result = (result * base) % m
        base = (base * base) % m
        e >>= 1
    return result


def upoly_irreducible(f: UPoly) -> bool:
    """Frobenius-power irreducibility test over the base field F_q."""
    n = f.deg
    if n is NEG_INF or n < 1:
        return False
    if not f.leading():
        return False
    if n == 1:
        return True
    from .intutil import factorize

    q = f.base.size
    x = UPoly.x(f.base)
    frob = [x % f]
    for _ in range(n):
        frob.append(upoly_powmod(frob[-1], q, f))
    if frob[n] != x % f:
        return False
    for r in factorize(n):
        if upoly_gcd(frob[n // r] - x, f).deg != 0:
            return False
    return True


def upoly_roots(f: UPoly, ext: FField):
    """All roots of f in ext, by exhaustive scan; sorted by encoding."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial vanishes everywhere")
    if ext.size > 2 ** 21:
        raise BoundExceeded("extension too large for an exhaustive root scan")
    emb = ff_embed(f.base, ext)
    g = f.map_field(emb)
    return [x for x in ext.elements() if not g.eval(x)]


def monic_irreducibles(base: FField, max_deg: int):
    """All monic irreducibles of degree <= max_deg, ordered by (degree, encoding)."""
    out = []
    for d in range(1, max_deg + 1):
        for low in range(base.size ** d):
            digits = []
            k = low
            for _ in range(d):
                digits.append(base.from_encoding(k % base.size))
                k //= base.size
            f = UPoly(base, digits + [base.one])
            if upoly_irreducible(f):
                out.append(f)
    return out


def irreducible_divisors(f: UPoly):
    """The set of monic irreducible divisors, by trial division."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    found = []
    g = f.monic()
    d = 1
    while g.deg >= 1:
        if d > g.deg // 2:
            found.append(g.monic())
            break
        for low in range(f.base.size ** d):
            cand = UPoly.from_encoding(f.base, low + f.base.size ** d)
            if not upoly_irreducible(cand):
                continue
            if (g % cand).is_zero():
                found.append(cand)
                while (g % cand).is_zero():
                    g = g // cand
        d += 1
    return found


def minimal_polynomial(elem: FFElem, sub: FField,
                       emb: FieldEmbedding | None = None) -> UPoly:
    """Monic minimal polynomial of elem over the embedded subfield."""
    from . import linalg

    sup = elem.field
    if emb is None:
        emb = ff_embed(sub, sup)
    sub_basis = [emb(sub.from_encoding(sub.p ** i)) for i in range(sub.n)]
    powers = [sup.one]
    for j in range(1, sup.n // sub.n + 1):
        powers.append(powers[-1] * elem)
    for j in range(1, len(powers)):
        # columns: b_s * elem^i for i < j; solve for elem^j
        cols = []
        for i in range(j):
            for b in sub_basis:
                cols.append((b * powers[i]).coeffs)
        rows = [[cols[c][r] for c in range(len(cols))] for r in range(sup.n)]
        sol = linalg.solve(rows, list(powers[j].coeffs), sup.p)
        if sol is None:
            continue
        coeffs = []
        for i in range(j):
            chunk = sol[i * sub.n:(i + 1) * sub.n]
            coeffs.append(-sub.element(chunk))
        return UPoly(sub, coeffs + [sub.one])
    raise RuntimeError("element has no relation below the field degree")


def lagrange_interpolate(points, base: FField) -> UPoly:
    """Unique polynomial of degree < len(points) through (x_i, y_i)."""
    result = UPoly.zero(base)
    xs = [x for x, _ in points]
    for i, (xi, yi) in enumerate(points):
        num = UPoly.one(base)
        den = base.one
        for j, xj in enumerate(xs):
            if j != i:
                num = num * UPoly(base, [-xj, base.one])
                den = den * (xi - xj)
        result = result + num * (yi / den)
    return result


def upoly_resultant(f: UPoly, g: UPoly) -> FFElem:
    """Resultant over the base field via the Euclidean recurrence."""
    base = f.base
    if f.is_zero() or g.is_zero():
        return base.zero
    res = base.one
    a, b = f, g
    while True:
        if b.deg == 0:
            return res * b.leading() ** a.deg
        r = a % b
        if r.is_zero():
            return base.zero
        res = res * b.leading() ** (a.deg - r.deg)
        if (a.deg * b.deg) % 2:
            res = -res
        a, b = b, r


# ---------------------------------------------------------------------------
# text parsing: sparse sums like "t^2+t+1", "3*t^4+2", coefficients in F_p

_TERM_RE = re.compile(r"^(?:(\d+)\*?)?(?:([A-Za-z])(?:\^(\d+))?)?$")


def parse_upoly(text: str, base: FField, var: str = "t") -> UPoly:
    """Parse a sparse polynomial with integer (prime-field) coefficients."""
    s = text.replace(" ", "").replace("-", "+-")
    if not s or s == "+":
        raise ParseError(f"empty polynomial text: {text!r}")
    coeffs: dict[int, int] = {}
    for raw in s.split("+"):
        if not raw:
            continue
        negate = raw.startswith("-")
        if negate:
            raw = raw[1:]
        m = _TERM_RE.match(raw)
        if not m or (m.group(2) is None and m.group(1) is None):
            raise ParseError(f"bad term {raw!r} in {text!r}")
        cv = int(m.group(1)) if m.group(1) else 1
        if m.group(2) is not None and m.group(2) != var:
            raise ParseError(f"unexpected variable {m.group(2)!r}; want {var!r}")
        exp = 0 if m.group(2) is None else int(m.group(3) or 1)
        if negate:
            cv = -cv
        coeffs[exp] = coeffs.get(exp, 0) + cv
    size = max(coeffs) + 1 if coeffs else 0
    vec = [0] * size
    for e, c in coeffs.items():
        vec[e] = c % base.p
    return UPoly(base, [base.element(c) for c in vec])
