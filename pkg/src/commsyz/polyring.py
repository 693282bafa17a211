"""Sparse multivariate polynomials over Q or GF(p) with pluggable monomial orders.

Variables describe entries of n x n generic matrices: x_i_j and y_i_j,
optionally preceded by auxiliary elimination variables t_k.  A monomial is an
exponent tuple over the ring's variable sequence.  Every order encodes a
monomial into a single integer V such that

    V(m1) > V(m2)  iff  m1 > m2 in the order, and
    V(m1 * m2) = V(m1) + V(m2) - V(1).

Order comparisons and dictionary keys inside the division/Buchberger kernels
are therefore plain int operations, which is what makes the pure-Python
engine fast enough for the desk-scale n=3 runs.
"""
from __future__ import annotations

import re
from fractions import Fraction
from heapq import heappush, heappop
from typing import Iterable, NamedTuple, Sequence

from .fields import QQ, PrimeField, RationalField, field_from_name

_EXP_BITS = 8
_EXP_CAP = (1 << _EXP_BITS) - 1
_DEG_BITS = 24

NOT_BIHOMOGENEOUS = "not bihomogeneous"


class VarId(NamedTuple):
    """One ring variable: matrix entry x_i_j / y_i_j or an auxiliary t_k."""

    block: str          # 'x', 'y' or 't'
    row: int            # 1-based; 0 for aux
    col: int            # 1-based; 0 for aux
    aux_index: int = 0  # 1-based position among aux vars; 0 for matrix entries

    @property
    def name(self) -> str:
        if self.block == "t":
            return f"t_{self.aux_index}"
        return f"{self.block}_{self.row}_{self.col}"


class MonomialOrder:
    """Base class: a total multiplicative well-order on exponent tuples."""

    name = "?"

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.unit_v = 0  # V(1); subclasses overwrite
        self.total_bits = 0  # every encoding fits in this many bits

    def encode(self, exps: Sequence[int]) -> int:
        raise NotImplementedError

    def decode(self, v: int) -> tuple:
        raise NotImplementedError

    def key(self, exps: Sequence[int]) -> int:
        return self.encode(exps)

    def greater(self, e1, e2) -> bool:
        return self.encode(e1) > self.encode(e2)

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, self.nvars))

    def __repr__(self):
        return f"{self.name}({self.nvars})"


def _grevlex_encode(exps, n):
    deg = 0
    v = 0
    for e in reversed(exps):
        if e > _EXP_CAP:
            raise OverflowError(f"exponent {e} exceeds order capacity {_EXP_CAP}")
        deg += e
        v = (v << _EXP_BITS) | (_EXP_CAP - e)
    if deg >= 1 << _DEG_BITS:
        raise OverflowError("total degree exceeds order capacity")
    return (deg << (_EXP_BITS * n)) | v


def _grevlex_decode(v, n):
    exps = []
    for _ in range(n):
        exps.append(_EXP_CAP - (v & _EXP_CAP))
        v >>= _EXP_BITS
    return tuple(exps)


class Grevlex(MonomialOrder):
    """Graded reverse lexicographic; ties go to the smaller trailing exponent."""

    name = "grevlex"

    def __init__(self, nvars: int):
        super().__init__(nvars)
        self.unit_v = (1 << (_EXP_BITS * nvars)) - 1
        self.total_bits = _EXP_BITS * nvars + _DEG_BITS

    def encode(self, exps):
        return _grevlex_encode(exps, self.nvars)

    def decode(self, v):
        return _grevlex_decode(v, self.nvars)


class Lex(MonomialOrder):
    """Pure lexicographic on the ring's variable priority sequence."""

    name = "lex"

    def __init__(self, nvars: int):
        super().__init__(nvars)
        self.unit_v = 0
        self.total_bits = _EXP_BITS * nvars

    def encode(self, exps):
        v = 0
        for e in exps:
            if e > _EXP_CAP:
                raise OverflowError(f"exponent {e} exceeds order capacity {_EXP_CAP}")
            v = (v << _EXP_BITS) | e
        return v

    def decode(self, v):
        exps = []
        for _ in range(self.nvars):
            exps.append(v & _EXP_CAP)
            v >>= _EXP_BITS
        return tuple(reversed(exps))


class BlockElimination(MonomialOrder):
    """Two grevlex blocks; the leading (elimination) block dominates.

    The first `front` variables form the elimination block, so any monomial
    containing one of them beats every monomial in the remaining variables.
    """

    name = "elim"

    def __init__(self, nvars: int, front: int):
        super().__init__(nvars)
        if not 0 < front < nvars:
            raise ValueError("elimination block must be a proper nonempty prefix")
        self.front = front
        self._rest = nvars - front
        self._rest_bits = _EXP_BITS * self._rest + _DEG_BITS
        self.total_bits = self._rest_bits + _EXP_BITS * front + _DEG_BITS
        self.unit_v = (((1 << (_EXP_BITS * front)) - 1) << self._rest_bits) | (
            (1 << (_EXP_BITS * self._rest)) - 1
        )

    def encode(self, exps):
        vf = _grevlex_encode(exps[: self.front], self.front)
        vr = _grevlex_encode(exps[self.front:], self._rest)
        return (vf << self._rest_bits) | vr

    def decode(self, v):
        ef = _grevlex_decode(v >> self._rest_bits, self.front)
        er = _grevlex_decode(v & ((1 << self._rest_bits) - 1), self._rest)
        return ef + er

    def __repr__(self):
        return f"elim({self.front}|{self._rest})"


def make_order(spec, nvars: int, naux: int = 0) -> MonomialOrder:
    if isinstance(spec, MonomialOrder):
        if spec.nvars != nvars:
            raise ValueError("order arity does not match ring")
        return spec
    if spec == "grevlex":
        return Grevlex(nvars)
    if spec == "lex":
        return Lex(nvars)
    if spec == "elim":
        if naux == 0:
            raise ValueError("elimination order needs auxiliary variables up front")
        return BlockElimination(nvars, naux)
    raise ValueError(f"unknown monomial order {spec!r}")


def mon_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mon_divides(a, b):
    """True if monomial a divides b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mon_div(a, b):
    """Exponent tuple of a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mon_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mon_degree(a):
    return sum(a)


class PolyRing:
    """k[t_*, x_i_j, y_i_j] for one matrix size n.

    Variable priority is aux vars first (highest), then x entries row-major,
    then y entries row-major, matching the default grevlex priority
    x_1_1 > x_1_2 > ... > y_n_n with any aux variables above all of them.
    """

    def __init__(self, n: int, field=QQ, order="grevlex", naux: int = 0):
        if n < 1:
            raise ValueError("matrix size must be >= 1")
        self.n = n
        self.field = field
        self.naux = naux
        vids = [VarId("t", 0, 0, k + 1) for k in range(naux)]
        vids += [VarId("x", i + 1, j + 1) for i in range(n) for j in range(n)]
        vids += [VarId("y", i + 1, j + 1) for i in range(n) for j in range(n)]
        self.variables = tuple(vids)
        self.nvars = len(vids)
        self.order = make_order(order, self.nvars, naux)
        self._index = {v.name: i for i, v in enumerate(vids)}
        self._zero_mon = (0,) * self.nvars
        self.zero = Polynomial(self, ())
        self.one = Polynomial(self, ((self._zero_mon, field.one),))

    # -- construction -----------------------------------------------------

    def var(self, name: str) -> "Polynomial":
        try:
            i = self._index[name]
        except KeyError:
            raise ValueError(f"no variable {name!r} in this ring") from None
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, ((tuple(exps), self.field.one),))

    def x(self, i: int, j: int) -> "Polynomial":
        return self.var(f"x_{i}_{j}")

    def y(self, i: int, j: int) -> "Polynomial":
        return self.var(f"y_{i}_{j}")

    def const(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if self.field.is_zero(c):
            return self.zero
        return Polynomial(self, ((self._zero_mon, c),))

    def poly(self, terms) -> "Polynomial":
        """Canonicalize a {monomial: coeff} dict or iterable of pairs."""
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        acc = {}
        fld = self.field
        for mon, c in items:
            mon = tuple(mon)
            if len(mon) != self.nvars:
                raise ValueError("monomial arity does not match ring")
            c = fld.coerce(c)
            prev = acc.get(mon)
            acc[mon] = c if prev is None else fld.add(prev, c)
        enc = self.order.encode
        out = [(mon, c) for mon, c in acc.items() if not fld.is_zero(c)]
        out.sort(key=lambda t: enc(t[0]), reverse=True)
        return Polynomial(self, tuple(out))

    def same_signature(self, other: "PolyRing") -> bool:
        return (
            self.n == other.n
            and self.naux == other.naux
            and self.field == other.field
            and self.order == other.order
        )

    # -- gradings ----------------------------------------------------------

    def mon_bidegree(self, mon) -> tuple:
        """(x-degree, y-degree) of a monomial; aux exponents must be zero."""
        na, nsq = self.naux, self.n * self.n
        if any(mon[:na]):
            raise ValueError("bidegree undefined for auxiliary variables")
        return (sum(mon[na: na + nsq]), sum(mon[na + nsq:]))

    # -- ring extension for elimination ------------------------------------

    def with_elimination_vars(self, extra: int = 1) -> "PolyRing":
        return PolyRing(self.n, self.field, "elim", naux=self.naux + extra)

    def embed(self, f: "Polynomial", target: "PolyRing") -> "Polynomial":
        """Map f into target, which has the same x/y blocks and >= naux."""
        pad = target.naux - self.naux
        if pad < 0 or target.n != self.n or target.field != self.field:
            raise ValueError("incompatible target ring")
        zeros = (0,) * pad
        return target.poly([(zeros + mon, c) for mon, c in f.terms])

    def project(self, f: "Polynomial", target: "PolyRing") -> "Polynomial":
        """Drop leading aux exponents (they must all be zero in f)."""
        drop = self.naux - target.naux
        if drop < 0 or target.n != self.n or target.field != self.field:
            raise ValueError("incompatible target ring")
        out = []
        for mon, c in f.terms:
            if any(mon[:drop]):
                raise ValueError("polynomial still involves eliminated variables")
            out.append((mon[drop:], c))
        return target.poly(out)

    # -- text format --------------------------------------------------------

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)

    def __repr__(self):
        return f"PolyRing(n={self.n}, field={self.field!r}, order={self.order!r}, naux={self.naux})"


class Polynomial:
    """Immutable sparse polynomial: terms sorted strictly descending."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def lm(self):
        """Leading monomial (exponent tuple)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][0]

    def lc(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][1]

    def degree(self):
        """Total degree, or -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(mon) for mon, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {sum(mon) for mon, _ in self.terms}
        return len(degs) == 1

    def bidegree(self):
        """Common (x-degree, y-degree) of all terms, else a marker string.

        The zero polynomial is degenerate and reports (0, 0).
        """
        if not self.terms:
            return (0, 0)
        ring = self.ring
        seen = {ring.mon_bidegree(mon) for mon, _ in self.terms}
        if len(seen) > 1:
            return NOT_BIHOMOGENEOUS
        return seen.pop()

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.ring is not other.ring and not self.ring.same_signature(other.ring):
            raise ValueError("polynomials from incompatible rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        self._check(other)
        fld = self.ring.field
        acc = dict(self.terms)
        for mon, c in other.terms:
            prev = acc.get(mon)
            if prev is None:
                acc[mon] = c
            else:
                s = fld.add(prev, c)
                if fld.is_zero(s):
                    del acc[mon]
                else:
                    acc[mon] = s
        enc = self.ring.order.encode
        out = sorted(acc.items(), key=lambda t: enc(t[0]), reverse=True)
        return Polynomial(self.ring, tuple(out))

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, tuple((mon, neg(c)) for mon, c in self.terms))

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        self._check(other)
        fld = self.ring.field
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        acc = {}
        for mon2, c2 in b:
            for mon1, c1 in a:
                mon = tuple(x + y for x, y in zip(mon1, mon2))
                c = fld.mul(c1, c2)
                prev = acc.get(mon)
                if prev is None:
                    acc[mon] = c
                else:
                    s = fld.add(prev, c)
                    if fld.is_zero(s):
                        del acc[mon]
                    else:
                        acc[mon] = s
        enc = self.ring.order.encode
        out = sorted(acc.items(), key=lambda t: enc(t[0]), reverse=True)
        return Polynomial(self.ring, tuple(out))

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self.ring.const(other) - self

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def scale(self, c):
        c = self.ring.field.coerce(c)
        if self.ring.field.is_zero(c):
            return self.ring.zero
        mul = self.ring.field.mul
        return Polynomial(self.ring, tuple((mon, mul(cc, c)) for mon, cc in self.terms))

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc()))

    def mul_monomial(self, mon, c=None):
        """Multiply by c * x^mon without re-sorting (monomials shift uniformly)."""
        fld = self.ring.field
        c = fld.one if c is None else fld.coerce(c)
        if fld.is_zero(c):
            return self.ring.zero
        mon = tuple(mon)
        out = tuple(
            (tuple(x + y for x, y in zip(m, mon)), fld.mul(cc, c)) for m, cc in self.terms
        )
        return Polynomial(self.ring, out)

    def exact_div(self, g: "Polynomial") -> "Polynomial":
        """Quotient self / g, raising if the division is not exact."""
        qs, r = divide(self, [g])
        if not r.is_zero():
            raise ValueError("division is not exact")
        return qs[0]

    def substitute(self, values: dict):
        """Evaluate at {var name: field element}; all variables must be given."""
        fld = self.ring.field
        vals = [fld.coerce(values[v.name]) for v in self.ring.variables]
        total = fld.zero
        for mon, c in self.terms:
            term = c
            for e, val in zip(mon, vals):
                for _ in range(e):
                    term = fld.mul(term, val)
            total = fld.add(total, term)
        return total

    # -- comparisons / hashing ------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if other == 0:
                return not self.terms
            return NotImplemented
        return self.terms == other.terms and self.ring.same_signature(other.ring)

    def __hash__(self):
        return hash(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<{format_polynomial(self)}>"


# -- text format ---------------------------------------------------------------

_VAR_RE = re.compile(r"^([xy])_(\d+)_(\d+)$|^t_(\d+)$")
_COEFF_RE = re.compile(r"^\d+(/\d+)?$")


def format_polynomial(f: Polynomial) -> str:
    """Render in the shared text format: `c*v^e*...` terms joined by ` + `/` - `."""
    if not f.terms:
        return "0"
    fld = f.ring.field
    names = [v.name for v in f.ring.variables]
    chunks = []
    for k, (mon, c) in enumerate(f.terms):
        neg = False
        if fld.p is None and c < 0:
            neg, c = True, -c
        factors = []
        for name, e in zip(names, mon):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        cs = fld.coeff_str(c)
        if not factors:
            body = cs
        elif cs == "1":
            body = "*".join(factors)
        else:
            body = "*".join([cs] + factors)
        if k == 0:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Parse the text format; whitespace is free, `-` both binds and separates."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return ring.zero
    pieces = re.findall(r"[+-]?[^+-]+", s)
    if "".join(pieces) != s:
        raise ValueError(f"cannot tokenize polynomial text {text!r}")
    fld = ring.field
    terms = []
    for piece in pieces:
        sign = 1
        if piece[0] == "+":
            piece = piece[1:]
        elif piece[0] == "-":
            sign = -1
            piece = piece[1:]
        if not piece:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = Fraction(sign)
        exps = [0] * ring.nvars
        for factor in piece.split("*"):
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if _COEFF_RE.match(factor):
                coeff *= Fraction(factor)
                continue
            if "^" in factor:
                base, _, expo = factor.partition("^")
                e = int(expo)
            else:
                base, e = factor, 1
            if e < 0:
                raise ValueError("negative exponent")
            if not _VAR_RE.match(base):
                raise ValueError(f"bad variable token {base!r}")
            try:
                idx = ring._index[base]
            except KeyError:
                raise ValueError(f"variable {base!r} not in ring") from None
            exps[idx] += e
        terms.append((tuple(exps), fld.coerce(coeff)))
    return ring.poly(terms)


# -- division kernel -------------------------------------------------------------
#
# Polynomials are compiled to lists of (V, coeff) with V the order encoding.
# The reducer set exposes find(exps, deg) -> compiled entry or None.


class CompiledPoly:
    __slots__ = ("index", "lead_v", "lead_exps", "lead_deg", "mask", "tail", "lc", "lc_inv")

    def __init__(self, index, lead_v, lead_exps, lead_deg, mask, tail, lc, lc_inv):
        self.index = index
        self.lead_v = lead_v
        self.lead_exps = lead_exps
        self.lead_deg = lead_deg
        self.mask = mask
        self.tail = tail
        self.lc = lc
        self.lc_inv = lc_inv


def var_mask(exps) -> int:
    m = 0
    for i, e in enumerate(exps):
        if e:
            m |= 1 << i
    return m


def compile_poly(f: Polynomial, order: MonomialOrder, index: int = -1) -> CompiledPoly:
    if f.is_zero():
        raise ValueError("cannot compile the zero polynomial")
    enc = order.encode
    terms = [(enc(mon), c) for mon, c in f.terms]
    if any(terms[i][0] <= terms[i + 1][0] for i in range(len(terms) - 1)):
        terms.sort(key=lambda t: t[0], reverse=True)
    lead_v, lc = terms[0]
    lead_exps = order.decode(lead_v)
    fld = f.ring.field
    lc_inv = fld.inv(lc)
    return CompiledPoly(
        index, lead_v, lead_exps, sum(lead_exps), var_mask(lead_exps), terms[1:], lc, lc_inv
    )


def decompile(ring: PolyRing, terms, order: MonomialOrder) -> Polynomial:
    dec = order.decode
    fld = ring.field
    out = [(dec(v), c) for v, c in terms if not fld.is_zero(c)]
    out.sort(key=lambda t: order.encode(t[0]), reverse=True)
    return Polynomial(ring, tuple(out))


class SequentialReducers:
    """Reducer lookup in a fixed listed sequence (first divisor wins)."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = entries

    def find(self, exps, deg, emask):
        for r in self.entries:
            if r.lead_deg > deg or (r.mask & ~emask):
                continue
            ok = True
            le = r.lead_exps
            for i in range(len(exps)):
                if le[i] > exps[i]:
                    ok = False
                    break
            if ok:
                return r
        return None


def normal_form(terms, reducers, order, field, record=None):
    """Reduce a compiled term list to normal form against `reducers`.

    terms: iterable of (V, coeff).  Returns the remainder as a descending
    list of (V, coeff).  When `record` is a list, appends one event
    (reducer_index, delta_v, coeff) per reduction step, where the subtracted
    multiple is coeff * monomial(delta_v + V(1)) * reducer.
    """
    p = field.p
    acc = {}
    heap = []
    for v, c in terms:
        prev = acc.get(v)
        if prev is None:
            acc[v] = c
            heappush(heap, -v)
        else:
            s = (prev + c) % p if p else prev + c
            if (s == 0) if p else field.is_zero(s):
                del acc[v]
            else:
                acc[v] = s
    decode = order.decode
    rem = []
    find = reducers.find
    if p:
        while heap:
            v = -heappop(heap)
            c = acc.get(v)
            if not c:
                acc.pop(v, None)
                continue
            exps = decode(v)
            red = find(exps, sum(exps), var_mask(exps))
            if red is None:
                rem.append((v, c))
                del acc[v]
                continue
            cf = c * red.lc_inv % p
            del acc[v]
            delta = v - red.lead_v
            if record is not None:
                record.append((red.index, delta, cf))
            for vt, ct in red.tail:
                vn = vt + delta
                prev = acc.get(vn)
                if prev is None:
                    acc[vn] = -cf * ct % p
                    heappush(heap, -vn)
                else:
                    s = (prev - cf * ct) % p
                    if s:
                        acc[vn] = s
                    else:
                        del acc[vn]
    else:
        while heap:
            v = -heappop(heap)
            c = acc.get(v)
            if c is None or c == 0:
                acc.pop(v, None)
                continue
            exps = decode(v)
            red = find(exps, sum(exps), var_mask(exps))
            if red is None:
                rem.append((v, c))
                del acc[v]
                continue
            cf = c * red.lc_inv
            del acc[v]
            delta = v - red.lead_v
            if record is not None:
                record.append((red.index, delta, cf))
            for vt, ct in red.tail:
                vn = vt + delta
                prev = acc.get(vn)
                if prev is None:
                    acc[vn] = -cf * ct
                    heappush(heap, -vn)
                else:
                    s = prev - cf * ct
                    if s:
                        acc[vn] = s
                    else:
                        del acc[vn]
    return rem


def divide(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder = None):
    """Multivariate division: f = sum(q_i * g_i) + r.

    Deterministic given the order and the listed sequence of divisors: at each
    step the first listed divisor whose lead divides the current lead is used.
    No monomial of r is divisible by any divisor lead.
    """
    ring = f.ring
    order = order or ring.order
    gs = [g for g in divisors]
    if any(g.is_zero() for g in gs):
        raise ValueError("zero divisor in division")
    compiled = [compile_poly(g, order, i) for i, g in enumerate(gs)]
    reducers = SequentialReducers(compiled)
    record = []
    enc = order.encode
    rem_terms = normal_form([(enc(m), c) for m, c in f.terms], reducers, order, ring.field, record)
    r = decompile(ring, rem_terms, order)
    fld = ring.field
    unit = order.unit_v
    qacc = [dict() for _ in gs]
    for idx, delta, cf in record:
        mon = order.decode(delta + unit)
        d = qacc[idx]
        prev = d.get(mon)
        d[mon] = cf if prev is None else fld.add(prev, cf)
    qs = [ring.poly(d) for d in qacc]
    return qs, r
