"""Exact multivariate polynomials and rational functions.

Coefficients are Fractions or QuadElems (all QuadElems in one polynomial share
a radicand).  A polynomial stores a sorted tuple of variable names and a map
exponent-vector -> coefficient with no zero entries, so structural equality is
semantic equality.  Monomials are ordered graded-lexicographically with the
variables in sorted-name order, which makes canonical forms reproducible
without any global registry.

RatFunc is the quotient-field element: numerator and denominator are divided
by their gcd (content extraction + primitive subresultant sequences, all
exact) and scaled so the denominator's leading coefficient is 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

from .quadelem import QuadElem, conjugate_scalar, demote
from .rationals import format_rat, rat

Coeff = Union[Fraction, QuadElem]
Expo = Tuple[int, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _scalar_is_zero(c: Coeff) -> bool:
    if isinstance(c, QuadElem):
        return not bool(c)
    return c == 0


def _scalar_inv(c: Coeff) -> Coeff:
    if isinstance(c, QuadElem):
        return c.inverse()
    return _ONE / c


def _grlex_key(expo: Expo) -> Tuple[int, Expo]:
    return (sum(expo), expo)


class MultiPoly:
    """Immutable sparse multivariate polynomial over Q or Q(sqrt(a))."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[Expo, Coeff]):
        vs = tuple(variables)
        if list(vs) != sorted(set(vs)):
            raise ValueError(f"variables must be sorted and distinct: {vs}")
        clean: Dict[Expo, Coeff] = {}
        for expo, coeff in terms.items():
            if len(expo) != len(vs):
                raise ValueError("exponent vector length mismatch")
            coeff = demote(coeff)
            if not _scalar_is_zero(coeff):
                clean[tuple(expo)] = coeff
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def const(c) -> "MultiPoly":
        c = demote(c)
        return MultiPoly((), {(): c})

    @staticmethod
    def var(name: str) -> "MultiPoly":
        return MultiPoly((name,), {(1,): _ONE})

    # -- basic queries --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_const(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def const_value(self) -> Coeff:
        if not self.terms:
            return _ZERO
        [(expo, coeff)] = self.terms.items()
        if sum(expo) != 0:
            raise ValueError("not a constant polynomial")
        return coeff

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def leading(self) -> Tuple[Expo, Coeff]:
        """Leading (exponent, coefficient) under graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        expo = max(self.terms, key=_grlex_key)
        return expo, self.terms[expo]

    def used_variables(self) -> Tuple[str, ...]:
        used = [False] * len(self.variables)
        for expo in self.terms:
            for i, e in enumerate(expo):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.variables, used) if u)

    def prune(self) -> "MultiPoly":
        """Drop variables that appear in no term."""
        keep = self.used_variables()
        if keep == self.variables:
            return self
        idx = [self.variables.index(v) for v in keep]
        terms = {tuple(e[i] for i in idx): c for e, c in self.terms.items()}
        return MultiPoly(keep, terms)

    # -- variable alignment ---------------------------------------------------

    def _embed(self, variables: Tuple[str, ...]) -> Dict[Expo, Coeff]:
        """Re-key terms onto a superset variable tuple."""
        if variables == self.variables:
            return dict(self.terms)
        pos = {v: i for i, v in enumerate(variables)}
        idx = [pos[v] for v in self.variables]
        out: Dict[Expo, Coeff] = {}
        n = len(variables)
        for expo, coeff in self.terms.items():
            new = [0] * n
            for i, e in zip(idx, expo):
                new[i] = e
            out[tuple(new)] = coeff
        return out

    @staticmethod
    def _aligned(f: "MultiPoly", g: "MultiPoly"):
        if f.variables == g.variables:
            return f.variables, dict(f.terms), dict(g.terms)
        vs = tuple(sorted(set(f.variables) | set(g.variables)))
        return vs, f._embed(vs), g._embed(vs)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction, QuadElem)):
            return MultiPoly.const(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        vs, a, b = MultiPoly._aligned(self, o)
        for expo, coeff in b.items():
            a[expo] = a.get(expo, _ZERO) + coeff
        return MultiPoly(vs, a)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        vs, a, b = MultiPoly._aligned(self, o)
        out: Dict[Expo, Coeff] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                expo = tuple(x + y for x, y in zip(e1, e2))
                prod = c1 * c2
                if expo in out:
                    out[expo] = out[expo] + prod
                else:
                    out[expo] = prod
        return MultiPoly(vs, out)

    __rmul__ = __mul__

    def scale(self, c: Coeff) -> "MultiPoly":
        c = demote(c)
        if _scalar_is_zero(c):
            return MultiPoly(self.variables, {})
        return MultiPoly(self.variables, {e: k * c for e, k in self.terms.items()})

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(1)
        square = self
        while n:
            if n & 1:
                result = result * square
            square = square * square
            n >>= 1
        return result

    def conjugate(self) -> "MultiPoly":
        """Apply sqrt(a) -> -sqrt(a) to every coefficient."""
        return MultiPoly(
            self.variables, {e: conjugate_scalar(c) for e, c in self.terms.items()}
        )

    # -- comparison / display -----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, QuadElem)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        vs, a, b = MultiPoly._aligned(self, other)
        return a == b

    def __hash__(self):
        return hash((self.prune().variables, frozenset(self.prune().terms.items())))

    def __repr__(self):
        return f"MultiPoly({self.variables!r}, {self.terms!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for expo in sorted(self.terms, key=_grlex_key, reverse=True):
            coeff = self.terms[expo]
            monos = [
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, expo)
                if e
            ]
            if isinstance(coeff, QuadElem):
                cs = f"({coeff})"
            else:
                cs = format_rat(coeff)
            if monos and cs == "1":
                parts.append("*".join(monos))
            elif monos and cs == "-1":
                parts.append("-" + "*".join(monos))
            else:
                parts.append("*".join([cs] + monos))
        out = parts[0]
        for p in parts[1:]:
            out += ("-" + p[1:]) if p.startswith("-") else ("+" + p)
        return out

    # -- division -------------------------------------------------------------

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact polynomial quotient; raises if the division is not exact."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if divisor.is_const:
            return self.scale(_scalar_inv(divisor.const_value()))
        vs, rem, div = MultiPoly._aligned(self, divisor)
        g = MultiPoly(vs, div)
        ge, gc = g.leading()
        gc_inv = _scalar_inv(gc)
        quotient: Dict[Expo, Coeff] = {}
        f = MultiPoly(vs, rem)
        while not f.is_zero:
            fe, fc = f.leading()
            qe = tuple(a - b for a, b in zip(fe, ge))
            if any(e < 0 for e in qe):
                raise ValueError("inexact polynomial division")
            qc = fc * gc_inv
            quotient[qe] = quotient.get(qe, _ZERO) + qc
            f = f - g * MultiPoly(vs, {qe: qc})
        return MultiPoly(vs, quotient)

    def monic(self) -> "MultiPoly":
        """Scale so the graded-lex leading coefficient is 1."""
        if self.is_zero:
            return self
        _, lc = self.leading()
        return self.scale(_scalar_inv(lc))


# -- gcd via content extraction + primitive pseudo-remainder sequences --------


def _to_univar(f: MultiPoly, var_index: int) -> Dict[int, MultiPoly]:
    """View f as univariate in variables[var_index], coefficients in the rest."""
    rest = tuple(v for i, v in enumerate(f.variables) if i != var_index)
    out: Dict[int, Dict[Expo, Coeff]] = {}
    for expo, coeff in f.terms.items():
        d = expo[var_index]
        sub = tuple(e for i, e in enumerate(expo) if i != var_index)
        out.setdefault(d, {})[sub] = coeff
    return {d: MultiPoly(rest, t) for d, t in out.items()}


def _from_univar(coeffs: Dict[int, MultiPoly], var: str) -> MultiPoly:
    total: MultiPoly = MultiPoly.const(0)
    xv = MultiPoly.var(var)
    for d, poly in coeffs.items():
        total = total + poly * xv**d
    return total


def _univar_pseudo_rem(
    f: Dict[int, MultiPoly], g: Dict[int, MultiPoly]
) -> Dict[int, MultiPoly]:
    """Pseudo-remainder of f by g (univariate with polynomial coefficients)."""

    def deg(p: Dict[int, MultiPoly]) -> int:
        return max(p) if p else -1

    df, dg = deg(f), deg(g)
    lc_g = g[dg]
    r = dict(f)
    while deg(r) >= dg and r:
        dr = deg(r)
        lc_r = r[dr]
        # r = lc_g * r - lc_r * x^(dr-dg) * g
        new: Dict[int, MultiPoly] = {}
        for d, p in r.items():
            new[d] = p * lc_g
        for d, p in g.items():
            shifted = d + dr - dg
            term = p * lc_r
            new[shifted] = new.get(shifted, MultiPoly.const(0)) - term
        r = {d: p for d, p in new.items() if not p.is_zero}
    return r


def poly_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Monic gcd of two polynomials over Q or Q(sqrt(a))."""
    f = f.prune()
    g = g.prune()
    if f.is_zero:
        return g.monic() if not g.is_zero else g
    if g.is_zero:
        return f.monic()
    if f.is_const or g.is_const:
        return MultiPoly.const(1)
    vs = tuple(sorted(set(f.variables) | set(g.variables)))
    f = MultiPoly(vs, f._embed(vs))
    g = MultiPoly(vs, g._embed(vs))

    if len(vs) == 1:
        if _all_rational(f) and _all_rational(g):
            return _univar_gcd_rational(f, g)
        # Univariate over Q(sqrt(a)): plain field Euclid.
        a, b = f, g
        while not b.is_zero:
            a, b = b, _univar_field_rem(a, b)
        return a.monic()

    # Recurse on the first variable.
    fu = _to_univar(f, 0)
    gu = _to_univar(g, 0)
    cont_f = _content(fu)
    cont_g = _content(gu)
    c = poly_gcd(cont_f, cont_g)
    fp = {d: p.exact_div(cont_f) for d, p in fu.items()}
    gp = {d: p.exact_div(cont_g) for d, p in gu.items()}

    def deg(p):
        return max(p) if p else -1

    if deg(fp) < deg(gp):
        fp, gp = gp, fp
    while gp:
        r = _univar_pseudo_rem(fp, gp)
        if r:
            cr = _content(r)
            r = {d: p.exact_div(cr) for d, p in r.items()}
        fp, gp = gp, r
    prim = _from_univar(fp, vs[0])
    return (c * prim).monic()


def _content(coeffs: Dict[int, MultiPoly]) -> MultiPoly:
    acc: MultiPoly = MultiPoly.const(0)
    for p in coeffs.values():
        acc = poly_gcd(acc, p)
        if acc.is_const and not acc.is_zero:
            return MultiPoly.const(1)
    return acc


def _all_rational(f: MultiPoly) -> bool:
    return all(not isinstance(c, QuadElem) for c in f.terms.values())


def _univar_int_coeffs(f: MultiPoly) -> Dict[int, int]:
    """Clear denominators and the integer content; sign of the leader kept."""
    from math import gcd as _igcd, lcm as _ilcm

    coeffs = {e[0]: c for e, c in f.terms.items()}
    scale = _ilcm(*(c.denominator for c in coeffs.values()), 1)
    ints = {d: int(c * scale) for d, c in coeffs.items()}
    content = 0
    for v in ints.values():
        content = _igcd(content, abs(v))
    return {d: v // content for d, v in ints.items()}


def _univar_gcd_rational(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Monic univariate gcd over Q via a primitive integer remainder sequence.

    Field Euclid over Q suffers quadratic coefficient blowup; working with
    primitive integer polynomials keeps every step small.
    """
    from math import gcd as _igcd

    var = f.variables[0]
    a = _univar_int_coeffs(f)
    b = _univar_int_coeffs(g)
    if max(a) < max(b):
        a, b = b, a
    while b:
        da, db = max(a), max(b)
        lc_b = b[db]
        # Pseudo-remainder of a by b, reduced to its primitive part.
        r = dict(a)
        while r and max(r) >= db:
            dr = max(r)
            lc_r = r[dr]
            new = {d: v * lc_b for d, v in r.items()}
            for d, v in b.items():
                nd = d + dr - db
                new[nd] = new.get(nd, 0) - v * lc_r
            r = {d: v for d, v in new.items() if v}
        if r:
            content = 0
            for v in r.values():
                content = _igcd(content, abs(v))
            r = {d: v // content for d, v in r.items()}
        a, b = b, r
    lc = a[max(a)]
    return MultiPoly((var,), {(d,): Fraction(v, lc) for d, v in a.items()})


def _univar_field_rem(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Remainder of univariate f by g with field coefficients."""
    fu = _to_univar(f, 0)
    gu = _to_univar(g, 0)
    dg = max(gu)
    lc_g_inv = _scalar_inv(gu[dg].const_value())
    r = {d: p.const_value() for d, p in fu.items()}
    gg = {d: p.const_value() for d, p in gu.items()}
    while r and max(r) >= dg:
        dr = max(r)
        factor = r[dr] * lc_g_inv
        for d, cc in gg.items():
            nd = d + dr - dg
            val = r.get(nd, _ZERO) - factor * cc
            if _scalar_is_zero(demote(val)):
                r.pop(nd, None)
            else:
                r[nd] = val
    var = f.variables[0]
    return MultiPoly((var,), {(d,): c for d, c in r.items()})


# -- rational functions --------------------------------------------------------


class RatFunc:
    """Quotient of two MultiPolys in canonical form.

    Canonical form: gcd cancelled, denominator leading coefficient 1, zero is
    0/1.  Equality is decided by cross-multiplication.
    """

    __slots__ = ("numer", "denom")

    def __init__(self, numer: MultiPoly, denom: MultiPoly, _canonical: bool = False):
        if denom.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _canonical:
            numer, denom = _normalize_pair(numer, denom)
        object.__setattr__(self, "numer", numer)
        object.__setattr__(self, "denom", denom)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def const(c) -> "RatFunc":
        return RatFunc(MultiPoly.const(c), MultiPoly.const(1), _canonical=True)

    @staticmethod
    def var(name: str) -> "RatFunc":
        return RatFunc(MultiPoly.var(name), MultiPoly.const(1), _canonical=True)

    @staticmethod
    def from_poly(p: MultiPoly) -> "RatFunc":
        return RatFunc(p, MultiPoly.const(1), _canonical=True)

    # -- queries ---------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.numer.is_zero

    def variables(self) -> Tuple[str, ...]:
        return tuple(
            sorted(set(self.numer.used_variables()) | set(self.denom.used_variables()))
        )

    def is_const(self) -> bool:
        return self.numer.is_const and self.denom.is_const

    def const_value(self) -> Coeff:
        num = self.numer.const_value()
        den = self.denom.const_value()
        return demote(num * _scalar_inv(den))

    # -- arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly):
            return RatFunc.from_poly(other)
        if isinstance(other, (int, Fraction, QuadElem)):
            return RatFunc.const(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(
            self.numer * o.denom + o.numer * self.denom, self.denom * o.denom
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.numer, self.denom, _canonical=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.numer * o.numer, self.denom * o.denom)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.denom, self.numer)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.numer**n, self.denom**n)

    def conjugate(self) -> "RatFunc":
        return RatFunc(self.numer.conjugate(), self.denom.conjugate())

    # -- substitution -------------------------------------------------------------

    def substitute(self, bindings: Mapping[str, "RatFunc"]) -> "RatFunc":
        """Compose: replace every variable by its binding (all must be bound)."""
        missing = [v for v in self.variables() if v not in bindings]
        if missing:
            raise KeyError(f"unbound variables in substitution: {missing}")
        pairs = {v: (b.numer, b.denom) for v, b in bindings.items()}
        num, den = eval_ratfunc_pair(self, pairs)
        return RatFunc(num, den)

    # -- comparison / display -------------------------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.numer * o.denom) == (o.numer * self.denom)

    def __hash__(self):
        return hash((self.numer, self.denom))

    def __repr__(self):
        return f"RatFunc({self.numer!r}, {self.denom!r})"

    def __str__(self):
        if self.denom == MultiPoly.const(1):
            return str(self.numer)
        return f"({self.numer})/({self.denom})"


def _normalize_pair(numer: MultiPoly, denom: MultiPoly) -> Tuple[MultiPoly, MultiPoly]:
    numer = numer.prune()
    denom = denom.prune()
    if numer.is_zero:
        return MultiPoly((), {}), MultiPoly.const(1)
    g = poly_gcd(numer, denom)
    if not (g.is_const and not g.is_zero):
        numer = numer.exact_div(g)
        denom = denom.exact_div(g)
    _, lc = denom.leading()
    inv = _scalar_inv(lc)
    return numer.scale(inv).prune(), denom.scale(inv).prune()


def _poly_eval(p: MultiPoly, bindings: Mapping[str, RatFunc]) -> RatFunc:
    pairs = {v: (b.numer, b.denom) for v, b in bindings.items()}
    num, den = eval_poly_pair(p, pairs)
    return RatFunc(num, den)


def _max_degrees(p: MultiPoly, maxdeg: Dict[str, int]) -> None:
    for expo in p.terms:
        for v, e in zip(p.variables, expo):
            if e > maxdeg.get(v, 0):
                maxdeg[v] = e


def _eval_with_maxdeg(
    p: MultiPoly,
    bindings: Mapping[str, Tuple[MultiPoly, MultiPoly]],
    maxdeg: Dict[str, int],
) -> MultiPoly:
    """Evaluate p * prod(den_v^maxdeg_v) at the binding pairs, gcd-free."""
    num_pows: Dict[str, list] = {}
    den_pows: Dict[str, list] = {}
    for v, m in maxdeg.items():
        n, d = bindings[v]
        pows_n = [MultiPoly.const(1)]
        pows_d = [MultiPoly.const(1)]
        for _ in range(m):
            pows_n.append(pows_n[-1] * n)
            pows_d.append(pows_d[-1] * d)
        num_pows[v], den_pows[v] = pows_n, pows_d
    pos = {v: i for i, v in enumerate(p.variables)}
    total = MultiPoly.const(0)
    for expo, coeff in p.terms.items():
        term = MultiPoly.const(coeff)
        for v, m in maxdeg.items():
            e = expo[pos[v]] if v in pos else 0
            term = term * num_pows[v][e] * den_pows[v][m - e]
        total = total + term
    return total


def eval_poly_pair(
    p: MultiPoly, bindings: Mapping[str, Tuple[MultiPoly, MultiPoly]]
) -> Tuple[MultiPoly, MultiPoly]:
    """Evaluate p at numerator/denominator pairs without gcd normalization.

    The common denominator is prod(den_v^maxdeg_v), so intermediate objects
    stay polynomial and no quotient-field arithmetic (with its gcd cost per
    operation) is ever triggered.
    """
    p = p.prune()
    if not p.variables:
        return p, MultiPoly.const(1)
    maxdeg: Dict[str, int] = {}
    _max_degrees(p, maxdeg)
    total = _eval_with_maxdeg(p, bindings, maxdeg)
    den = MultiPoly.const(1)
    for v, m in maxdeg.items():
        den = den * bindings[v][1] ** m
    return total, den


def eval_ratfunc_pair(
    f: "RatFunc", bindings: Mapping[str, Tuple[MultiPoly, MultiPoly]]
) -> Tuple[MultiPoly, MultiPoly]:
    """Evaluate a RatFunc at binding pairs, gcd-free.

    Numerator and denominator are cleared with one shared denominator
    prod(den_v^maxdeg_v), which then cancels structurally, keeping the result
    as small as the inputs allow without any gcd computation.
    """
    num = f.numer.prune()
    den = f.denom.prune()
    maxdeg: Dict[str, int] = {}
    _max_degrees(num, maxdeg)
    _max_degrees(den, maxdeg)
    if not maxdeg:
        return num, den
    num_eval = _eval_with_maxdeg(num, bindings, maxdeg)
    den_eval = _eval_with_maxdeg(den, bindings, maxdeg)
    if den_eval.is_zero:
        raise ZeroDivisionError("substitution produced an identically-zero denominator")
    return num_eval, den_eval


def ratfunc_substitute(f: RatFunc, bindings: Mapping[str, RatFunc]) -> RatFunc:
    """Module-level alias for RatFunc.substitute."""
    return f.substitute(bindings)
