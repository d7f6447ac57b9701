"""Normal-form arithmetic in skew PBW extensions ``A = sigma(R)<x_1, ..., x_n>``.

Elements are finite sums ``sum a_alpha x^alpha`` over standard monomials
``x_1^a1 ... x_n^an`` with coefficients on the left.  Products are computed by
rewriting with

    x_i r     = sigma_i(r) x_i + delta_i(r)
    x_j x_i   = d_ij x_i x_j + r0 + sum_k r_k x_k        (i < j)

Variables are numbered from 1 in every public signature; exponent vectors are
plain tuples indexed from 0.
"""

import random
from dataclasses import dataclass, field

from . import finite_rings as fr
from .errors import (AssociativityCounterexample, HypothesisViolation, InvalidSpec,
                     NotInvariant, NotProper, ResourceBoundExceeded)
from .sigma_delta import EndoSystem, ideal_invariance, quotient_system

DEFAULT_MAX_DEGREE = 16


def monomial_key(m):
    """Degree first, then lexicographic on the exponent vector."""
    return (sum(m), m)


def monomials_up_to(n, degree):
    """All exponent vectors of total degree ``<= degree``, in monomial order."""
    out = []

    def rec(prefix, left, k):
        if k == n:
            out.append(tuple(prefix))
            return
        for e in range(left + 1):
            rec(prefix + [e], left - e, k + 1)

    rec([], degree, 0)
    return sorted(out, key=monomial_key)


class ExtensionSpec:
    """The data of a skew PBW extension over a finite ring.

    Parameters
    ----------
    system : EndoSystem
        ``(Sigma, Delta)`` on the base ring; ``n`` is ``system.n``.
    d : dict, optional
        ``{(i, j): index}`` for ``1 <= i < j <= n``.  Missing pairs default to 1.
    rel : dict, optional
        ``{(i, j): (r0, (r_1, ..., r_n))}``.  Missing pairs default to zero.
    max_degree : int
        Products whose result exceeds this total degree raise
        ``ResourceBoundExceeded``.
    """

    def __init__(self, system, d=None, rel=None, *, max_degree=DEFAULT_MAX_DEGREE):
        if not isinstance(system, EndoSystem):
            raise InvalidSpec("ExtensionSpec needs a validated EndoSystem")
        self.system = system
        self.base = system.ring
        self.n = system.n
        self.max_degree = max_degree
        R, n = self.base, self.n
        pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        d = dict(d or {})
        rel = dict(rel or {})
        for key in list(d) + list(rel):
            if key not in pairs:
                raise InvalidSpec(f"relation key {key} must be (i, j) with 1 <= i < j <= {n}")
        self.d = {p: d.get(p, R.one) for p in pairs}
        self.rel = {}
        for p in pairs:
            r0, rs = rel.get(p, (R.zero, (R.zero,) * n))
            rs = tuple(rs)
            if len(rs) != n:
                raise InvalidSpec(f"relation {p} needs {n} linear coefficients, got {len(rs)}")
            self.rel[p] = (r0, rs)
        for p, v in self.d.items():
            if v == R.zero:
                raise InvalidSpec(f"d{p} must be nonzero")
        for v in list(self.d.values()) + [x for r0, rs in self.rel.values() for x in (r0, *rs)]:
            if not 0 <= v < R.order:
                raise InvalidSpec(f"relation constant {v} is not an element index of {R.name}")
        self.warnings = list(system.warnings)
        self.validated = False
        self.diagnostics = None
        self._var_mono = {}
        self._term = {}

    # -- constructors for elements ------------------------------------------------
    def zero(self):
        return SkewPoly(self, {})

    def one(self):
        return self.const(self.base.one)

    def const(self, r):
        return SkewPoly(self, {self.unit_exp(): r})

    def x(self, i):
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"variable x{i} out of range 1..{self.n}")
        return SkewPoly(self, {self.var_exp(i): self.base.one})

    def unit_exp(self):
        return (0,) * self.n

    def var_exp(self, i):
        e = [0] * self.n
        e[i - 1] = 1
        return tuple(e)

    def monomials(self, degree):
        return monomials_up_to(self.n, degree)

    def poly(self, terms):
        """Build from ``{exponent tuple: coefficient index}``."""
        return SkewPoly(self, terms)

    def from_coefficients(self, monos, coeffs):
        return SkewPoly(self, dict(zip(monos, coeffs)))

    def random_element(self, rng, degree):
        monos = self.monomials(degree)
        return SkewPoly(self, {m: rng.randrange(self.base.order) for m in monos})

    def parse(self, text):
        from .expr import parse_element
        return parse_element(self, text)

    def __repr__(self):
        return f"<ExtensionSpec over {self.base.name}, n={self.n}>"

    # -- rewriting core --------------------------------------------------------------
    def _scale_into(self, acc, c, terms):
        """acc += c * terms (left scalar)."""
        R = self.base
        mul, add = R._mul[c], R._add
        z = R.zero
        for m, v in terms.items():
            w = mul[v]
            if w != z:
                w = add[acc.get(m, z)][w]
                if w == z:
                    acc.pop(m, None)
                else:
                    acc[m] = w

    def var_mono(self, i, beta):
        """``x_i * x^beta`` in normal form (``i`` 0-based)."""
        key = (i, beta)
        hit = self._var_mono.get(key)
        if hit is not None:
            return hit
        R = self.base
        j = next((k for k, e in enumerate(beta) if e), None)
        if j is None or i <= j:
            m = list(beta)
            m[i] += 1
            out = {tuple(m): R.one}
        else:
            rest = list(beta)
            rest[j] -= 1
            rest = tuple(rest)
            d = self.d[(j + 1, i + 1)]
            r0, rs = self.rel[(j + 1, i + 1)]
            out = {}
            # d * x_j * (x_i * x^rest)
            inner = self.var_poly(i, {rest: R.one})
            self._scale_into(out, d, self.var_poly(j, inner))
            if r0 != R.zero:
                self._scale_into(out, r0, {rest: R.one})
            for k, rk in enumerate(rs):
                if rk != R.zero:
                    self._scale_into(out, rk, self.var_mono(k, rest))
        self._var_mono[key] = out
        return out

    def var_poly(self, i, terms):
        """``x_i * P`` for a normal-form ``P`` (``i`` 0-based)."""
        sigma = self.system.sigmas[i].image
        delta = self.system.deltas[i].image
        z = self.base.zero
        out = {}
        for m, c in terms.items():
            s = sigma[c]
            if s != z:
                self._scale_into(out, s, self.var_mono(i, m))
            dc = delta[c]
            if dc != z:
                self._scale_into(out, dc, {m: self.base.one})
        return out

    def term_product(self, alpha, b, beta):
        """``x^alpha * (b x^beta)`` in normal form."""
        key = (alpha, b, beta)
        hit = self._term.get(key)
        if hit is not None:
            return hit
        P = {beta: b}
        for i in range(self.n - 1, -1, -1):
            for _ in range(alpha[i]):
                P = self.var_poly(i, P)
        self._term[key] = P
        return P


class SkewPoly:
    """An element of a skew PBW extension in normal form.  Immutable."""

    __slots__ = ("spec", "terms", "_hash")

    def __init__(self, spec, terms):
        z = spec.base.zero
        self.spec = spec
        self.terms = {tuple(m): int(c) for m, c in terms.items() if c != z}
        self._hash = None

    # -- inspection --------------------------------------------------------------
    @property
    def degree(self):
        """Total degree; ``-1`` for the zero element."""
        return max((sum(m) for m in self.terms), default=-1)

    def coeff(self, m):
        return self.terms.get(tuple(m), self.spec.base.zero)

    @property
    def constant_coeff(self):
        return self.coeff(self.spec.unit_exp())

    def support(self):
        return sorted(self.terms, key=monomial_key)

    def items(self):
        return [(m, self.terms[m]) for m in self.support()]

    def higher_coeffs(self):
        """Coefficients of every non-constant monomial, in monomial order."""
        u = self.spec.unit_exp()
        return [c for m, c in self.items() if m != u]

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    # -- arithmetic ------------------------------------------------------------------
    def _check(self, other):
        if isinstance(other, SkewPoly):
            if other.spec is not self.spec:
                raise ValueError("elements of different extensions")
            return other
        if isinstance(other, int):
            return self.spec.const(self.spec.base.from_int(other))
        if isinstance(other, fr.RingElement):
            return self.spec.const(other.index)
        return NotImplemented

    def __add__(self, other):
        o = self._check(other)
        return NotImplemented if o is NotImplemented else add(self, o)

    __radd__ = __add__

    def __neg__(self):
        return negate(self)

    def __sub__(self, other):
        o = self._check(other)
        return NotImplemented if o is NotImplemented else add(self, negate(o))

    def __rsub__(self, other):
        o = self._check(other)
        return NotImplemented if o is NotImplemented else add(o, negate(self))

    def __mul__(self, other):
        o = self._check(other)
        return NotImplemented if o is NotImplemented else multiply(self, o)

    def __rmul__(self, other):
        o = self._check(other)
        return NotImplemented if o is NotImplemented else multiply(o, self)

    def __pow__(self, k):
        return power(self, k)

    def __eq__(self, other):
        if isinstance(other, SkewPoly):
            return other.spec is self.spec and other.terms == self.terms
        if isinstance(other, int):
            return self == self.spec.const(self.spec.base.from_int(other))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- text / JSON ----------------------------------------------------------------
    def to_text(self):
        if not self.terms:
            return "0"
        R = self.spec.base
        parts = []
        for m, c in self.items():
            mono = "*".join(f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e)
            lit = R.format_element(c)
            if not mono:
                parts.append(lit)
            elif c == R.one:
                parts.append(mono)
            else:
                parts.append(f"{lit}*{mono}")
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"SkewPoly({self.to_text()})"

    def to_json(self):
        return {"terms": [{"exp": list(m), "coeff": c} for m, c in self.items()]}

    @classmethod
    def from_json(cls, spec, obj):
        try:
            terms = {}
            for t in obj["terms"]:
                exp = tuple(int(e) for e in t["exp"])
                if len(exp) != spec.n or any(e < 0 for e in exp):
                    raise InvalidSpec(f"bad exponent vector {t['exp']!r}")
                c = int(t["coeff"])
                if not 0 <= c < spec.base.order:
                    raise InvalidSpec(f"coefficient index {c} out of range")
                terms[exp] = spec.base.add(terms.get(exp, spec.base.zero), c)
        except (KeyError, TypeError) as exc:
            raise InvalidSpec(f"malformed SkewPoly JSON: {exc}") from None
        return cls(spec, terms)


# -- operations -------------------------------------------------------------------------

def add(f, g):
    R = f.spec.base
    terms = dict(f.terms)
    for m, c in g.terms.items():
        terms[m] = R.add(terms.get(m, R.zero), c)
    return SkewPoly(f.spec, terms)


def negate(f):
    R = f.spec.base
    return SkewPoly(f.spec, {m: R.neg(c) for m, c in f.terms.items()})


def scalar_left_mul(r, f):
    R = f.spec.base
    return SkewPoly(f.spec, {m: R.mul(r, c) for m, c in f.terms.items()})


def multiply(f, g, max_degree=None):
    """Normal form of ``f * g``."""
    spec = f.spec
    if g.spec is not spec:
        raise ValueError("elements of different extensions")
    acc = {}
    for alpha, a in f.terms.items():
        for beta, b in g.terms.items():
            spec._scale_into(acc, a, spec.term_product(alpha, b, beta))
    out = SkewPoly(spec, acc)
    bound = spec.max_degree if max_degree is None else max_degree
    if out.degree > bound:
        raise ResourceBoundExceeded(f"product of degree {out.degree} exceeds degree bound {bound}")
    return out


def power(f, k, max_degree=None):
    if k < 0:
        raise ValueError("negative power")
    out = f.spec.one()
    for _ in range(k):
        out = multiply(out, f, max_degree)
    return out


def times_var_coeff(spec, i, r):
    """``x_i * r = sigma_i(r) x_i + delta_i(r)``."""
    return multiply(spec.x(i), spec.const(r))


def reorder(spec, j, i):
    """``x_j * x_i`` for ``j > i``: ``d_ij x_i x_j + r0 + sum r_k x_k``."""
    if not j > i:
        raise ValueError("reorder needs j > i")
    return multiply(spec.x(j), spec.x(i))


# -- validation ----------------------------------------------------------------------------

@dataclass
class Diagnostics:
    warnings: list = field(default_factory=list)
    d_central_invertible: bool = True
    associativity_triples: int = 0
    seed: int = 0


def _d_hypothesis(spec):
    R = spec.base
    Z, U = fr.center(R), fr.units(R)
    bad = [(p, v) for p, v in spec.d.items() if v not in Z or v not in U]
    return bad


def validate_extension(spec, *, samples=500, seed=0, sample_degree=2):
    """Check the hypotheses on ``d`` and sample associativity.

    Marks ``spec`` validated and returns it; ``spec.diagnostics`` holds the
    record.  Raises ``HypothesisViolation`` or ``AssociativityCounterexample``.
    """
    R = spec.base
    bad = _d_hypothesis(spec)
    if bad:
        p, v = bad[0]
        raise HypothesisViolation(f"d{p} = {R.format_element(v)} is not central and invertible")
    gens = [spec.x(i) for i in range(1, spec.n + 1)] + [spec.const(r) for r in fr.additive_generators(R)]
    triples = [(f, g, h) for f in gens for g in gens for h in gens]
    rng = random.Random(seed)
    triples += [tuple(spec.random_element(rng, sample_degree) for _ in range(3)) for _ in range(samples)]
    bound = max(spec.max_degree, 3 * sample_degree)
    for f, g, h in triples:
        left = multiply(multiply(f, g, bound), h, bound)
        right = multiply(f, multiply(g, h, bound), bound)
        if left != right:
            raise AssociativityCounterexample((f, g, h))
    spec.validated = True
    spec.diagnostics = Diagnostics(list(spec.warnings), True, len(triples), seed)
    return spec


def extension(system, d=None, rel=None, **kwargs):
    """Build and validate in one step."""
    max_degree = kwargs.pop("max_degree", DEFAULT_MAX_DEGREE)
    return validate_extension(ExtensionSpec(system, d, rel, max_degree=max_degree), **kwargs)


# -- quotients --------------------------------------------------------------------------------

def quotient_extension(spec, I):
    """``A/IA`` as an extension of ``R/I`` with the induced system.

    The returned spec carries ``projection`` (base index -> quotient index) and
    ``parent``; use ``project`` to map elements.
    """
    R = spec.base
    elems = I.elements if isinstance(I, fr.IdealDescriptor) else frozenset(I)
    if R.one in elems:
        raise NotProper("quotient by the whole ring")
    if not fr.is_ideal(R, elems):
        raise ValueError(f"{sorted(elems)} is not a two-sided ideal")
    if not ideal_invariance(spec.system, elems).invariant:
        raise NotInvariant(f"{sorted(elems)} is not (Sigma, Delta)-invariant")
    Q, qsys, proj = quotient_system(spec.system, elems)
    d = {p: proj[v] for p, v in spec.d.items()}
    rel = {p: (proj[r0], tuple(proj[x] for x in rs)) for p, (r0, rs) in spec.rel.items()}
    out = ExtensionSpec(qsys, d, rel, max_degree=spec.max_degree)
    for i, s in enumerate(spec.system.sigmas, 1):
        image = {s(a) for a in elems}
        if image != set(elems):
            out.warnings.append(f"sigma_{i}(I) is a proper subset of I; A/IA is still formed "
                                "from the induced system")
    out.projection = proj
    out.parent = spec
    return validate_extension(out, samples=100)


def project(f, qspec):
    """Image of ``f`` in the quotient extension ``qspec``."""
    if getattr(qspec, "parent", None) is not f.spec:
        raise ValueError("element does not belong to the quotient's parent extension")
    Q = qspec.base
    terms = {}
    for m, c in f.terms.items():
        terms[m] = Q.add(terms.get(m, Q.zero), qspec.projection[c])
    return SkewPoly(qspec, terms)
