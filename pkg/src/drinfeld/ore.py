"""The twisted polynomial ring L{tau} with tau*c = c^p*tau.

Elements act on extensions of L as additive polynomials
x -> sum c_i x^(p^i); kernels are F_p-subspaces computed by linear algebra
over the prime field.
"""

from __future__ import annotations

from . import linalg
from .errors import (BoundExceeded, DivisionByZero, FieldMismatch,
                     Inseparable, NotFound, ZeroPolynomial)
from .finitefield import FFElem, FField, extension_of, ff_embed

NEG_INF = float("-inf")


class OrePoly:
    """sum coeffs[i] * tau^i over a finite field, with the p-power twist."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FField, coeffs):
        elems = []
        for c in coeffs:
            elems.append(c if isinstance(c, FFElem) else field.element(c))
        while elems and not elems[-1]:
            elems.pop()
        for c in elems:
            if c.field != field:
                raise FieldMismatch("coefficient outside the base field")
        self.field = field
        self.coeffs = tuple(elems)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def tau(cls, field, i: int = 1):
        return cls(field, (0,) * i + (1,))

    @classmethod
    def scalar(cls, c: FFElem):
        return cls(c.field, (c,))

    @property
    def deg(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def coeff(self, i: int) -> FFElem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def constant(self) -> FFElem:
        return self.coeff(0)

    def leading(self) -> FFElem:
        if not self.coeffs:
            raise ZeroPolynomial("zero operator has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def _coerce(self, other):
        if isinstance(other, OrePoly):
            if other.field != self.field:
                raise FieldMismatch("operators over different fields")
            return other
        if isinstance(other, FFElem):
            return OrePoly.scalar(self.field.element(other))
        return OrePoly(self.field, (other,))

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return OrePoly(self.field, [self.coeff(i) + other.coeff(i)
                                    for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return OrePoly(self.field, [self.coeff(i) - other.coeff(i)
                                    for i in range(n)])

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return OrePoly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return OrePoly.zero(self.field)
        p = self.field.p
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            # tau^i * c = c^(p^i) * tau^i
            twisted = other.coeffs
            cur = list(twisted)
            for _ in range(i):
                cur = [c ** p for c in cur]
            for j, b in enumerate(cur):
                if b:
                    out[i + j] = out[i + j] + a * b
        return OrePoly(self.field, out)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __pow__(self, e: int):
        result = OrePoly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, FFElem)):
            try:
                other = self._coerce(other)
            except FieldMismatch:
                return False
        return (isinstance(other, OrePoly) and other.field == self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, x: FFElem) -> FFElem:
        return ore_eval(self, x)

    def map_field(self, emb) -> "OrePoly":
        return OrePoly(emb.sup, [emb(c) for c in self.coeffs])

    def to_dict(self):
        return {"field": self.field.to_dict(),
                "coeffs": [c.to_list() for c in self.coeffs]}

    @classmethod
    def from_dict(cls, d):
        field = FField.from_dict(d["field"])
        return cls(field, [field.element(c) for c in d["coeffs"]])

    def __repr__(self):
        if self.is_zero():
            return "OrePoly(0)"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            body = "" if (c == self.field.one and i > 0) else repr(c)
            if i == 0:
                parts.append(repr(c))
            else:
                parts.append(f"{body}{'*' if body else ''}tau"
                             + (f"^{i}" if i > 1 else ""))
        return "OrePoly(" + " + ".join(parts) + ")"


def ore_mul(a: OrePoly, b: OrePoly) -> OrePoly:
    return a * b


def ore_divmod_left(a: OrePoly, b: OrePoly):
    """(q, r) with a = q*b + r and deg r < deg b."""
    if b.is_zero():
        raise DivisionByZero("division by the zero operator")
    field = a.field
    if b.field != field:
        raise FieldMismatch("operators over different fields")
    q = OrePoly.zero(field)
    r = a
    db, lead = b.deg, b.leading()
    while not r.is_zero() and r.deg >= db:
        k = r.deg - db
        # leading term of (c tau^k) * b is c * lead^(p^k) tau^(deg r)
        c = r.leading() / lead.p_power(k)
        mono = OrePoly(field, (0,) * k + (c,))
        q = q + mono
        r = r - mono * b
    return q, r


def ore_divmod_right(a: OrePoly, b: OrePoly):
    """(q, r) with a = b*q + r and deg r < deg b."""
    if b.is_zero():
        raise DivisionByZero("division by the zero operator")
    field = a.field
    if b.field != field:
        raise FieldMismatch("operators over different fields")
    q = OrePoly.zero(field)
    r = a
    db, lead = b.deg, b.leading()
    while not r.is_zero() and r.deg >= db:
        k = r.deg - db
        # leading term of b * (c tau^k) is lead * c^(p^db) tau^(deg r)
        c = (r.leading() / lead).p_root(db)
        mono = OrePoly(field, (0,) * k + (c,))
        q = q + mono
        r = r - b * mono
    return q, r


def ore_eval(f: OrePoly, x: FFElem) -> FFElem:
    """Apply the additive polynomial: sum c_i x^(p^i)."""
    if x.field == f.field:
        coeffs = f.coeffs
    else:
        emb = ff_embed(f.field, x.field)
        coeffs = tuple(emb(c) for c in f.coeffs)
    p = f.field.p
    acc = x.field.zero
    power = x
    for i, c in enumerate(coeffs):
        if i:
            power = power ** p
        if c:
            acc = acc + c * power
    return acc


class KernelSpace:
    """F_p-vector space of roots of an additive polynomial in a fixed field."""

    __slots__ = ("field", "basis", "points")

    def __init__(self, field, basis):
        self.field = field
        self.basis = tuple(basis)
        pts = [field.zero]
        for b in self.basis:
            scaled = []
            acc = b
            for _ in range(1, field.p):
                scaled.append(acc)
                acc = acc + b
            pts = pts + [q + s for s in scaled for q in pts]
        pts.sort(key=lambda e: e.encode())
        self.points = tuple(pts)

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, x):
        return x in set(self.points)


def _kernel_basis(f: OrePoly, ext: FField):
    emb = ff_embed(f.field, ext)
    coeffs = [emb(c) for c in f.coeffs]
    p, n = ext.p, ext.n
    cols = []
    for j in range(n):
        x = ext.from_encoding(p ** j)
        acc = ext.zero
        power = x
        for i, c in enumerate(coeffs):
            if i:
                power = power ** p
            if c:
                acc = acc + c * power
        cols.append(acc.coeffs)
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    return [ext.element(v) for v in linalg.nullspace(rows, p)]


def ore_kernel(f: OrePoly, ext: FField) -> KernelSpace:
    """All roots of f in ext, with an F_p-basis; |kernel| divides p^deg."""
    if f.is_zero():
        raise ZeroPolynomial("kernel of the zero operator is everything")
    return KernelSpace(ext, _kernel_basis(f, ext))


def ore_kernel_dim(f: OrePoly, ext: FField) -> int:
    if f.is_zero():
        raise ZeroPolynomial("kernel of the zero operator is everything")
    return len(_kernel_basis(f, ext))


def ore_splitting_degree(f: OrePoly, cap: int, seed: int = 0) -> int:
    """Minimal extension degree of the base field where f has p^deg roots."""
    if f.is_zero():
        raise ZeroPolynomial("zero operator")
    if not f.constant():
        raise Inseparable("vanishing constant term: kernel cannot be full")
    want = f.deg
    for m in range(1, cap + 1):
        try:
            ext, _ = extension_of(f.field, m, seed)
        except BoundExceeded:
            # the desk-scale field bound acts as an effective cap
            raise NotFound(m - 1,
                           f"extension degree {m} leaves the desk scale")
        if ore_kernel_dim(f, ext) == want:
            return m
    raise NotFound(cap, f"no full kernel within extension degree {cap}")


def separable_part(f: OrePoly):
    """(g, s) with f = Frob^s o g and g having nonzero constant term."""
    if f.is_zero():
        raise ZeroPolynomial("zero operator")
    s = 0
    while not f.coeff(s):
        s += 1
    g = OrePoly(f.field, [c.p_root(s) for c in f.coeffs[s:]])
    return g, s
