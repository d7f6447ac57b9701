"""Endomorphisms, sigma-derivations and the compatibility notions built on them.

Maps are stored as index tables (``table[a]`` is the image of ``a``).
The families ``sigma^alpha = sigma_1^a1 o ... o sigma_n^an`` and
``delta^beta`` are finite on a finite ring; ``EndoSystem`` computes them once by
cycle detection on each generator's powers.
"""

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import finite_rings as fr
from .errors import ClosureBoundExceeded, InvalidSpec, LawViolation, NotInvariant

MAX_CLOSURE = 4096


def _first(mask):
    return tuple(int(v) for v in np.argwhere(mask)[0])


def _check_additive(R, t, what):
    A = R.add_table
    bad = t[A] != R.add_table[np.ix_(t, t)]
    if bad.any():
        raise LawViolation(f"{what} additive", _first(bad))


class EndoMap:
    """A unital ring endomorphism, checked on all pairs at construction."""

    def __init__(self, ring, table, name=None):
        t = np.asarray(table, dtype=np.int64)
        if t.shape != (ring.order,) or t.min() < 0 or t.max() >= ring.order:
            raise LawViolation("endomorphism table shape", (len(t),))
        if t[ring.zero] != ring.zero:
            raise LawViolation("sigma(0) = 0", (ring.zero,))
        if t[ring.one] != ring.one:
            raise LawViolation("sigma(1) = 1", (ring.one,))
        _check_additive(ring, t, "sigma")
        bad = t[ring.mul_table] != ring.mul_table[np.ix_(t, t)]
        if bad.any():
            raise LawViolation("sigma multiplicative", _first(bad))
        t.setflags(write=False)
        self.ring = ring
        self.table = t
        self.image = t.tolist()
        self.name = name
        self.injective = len(set(self.image)) == ring.order

    def __call__(self, a):
        return self.image[a]

    def __eq__(self, other):
        return isinstance(other, EndoMap) and other.ring is self.ring and other.image == self.image

    def __hash__(self):
        return hash(tuple(self.image))

    def __repr__(self):
        return f"EndoMap({self.name or self.image})"


class SigmaDerivation:
    """An additive map with ``delta(ab) = sigma(a) delta(b) + delta(a) b``."""

    def __init__(self, ring, sigma, table, name=None):
        t = np.asarray(table, dtype=np.int64)
        if t.shape != (ring.order,) or t.min() < 0 or t.max() >= ring.order:
            raise LawViolation("derivation table shape", (len(t),))
        _check_additive(ring, t, "delta")
        M, A = ring.mul_table, ring.add_table
        s = sigma.table
        lhs = t[M]
        rhs = A[M[s[:, None], t[None, :]], M[t[:, None], np.arange(ring.order)[None, :]]]
        bad = lhs != rhs
        if bad.any():
            raise LawViolation("delta(ab) = sigma(a)delta(b) + delta(a)b", _first(bad))
        t.setflags(write=False)
        self.ring = ring
        self.sigma = sigma
        self.table = t
        self.image = t.tolist()
        self.name = name

    def __call__(self, a):
        return self.image[a]

    @property
    def is_zero(self):
        return all(v == self.ring.zero for v in self.image)

    def __repr__(self):
        return f"SigmaDerivation({self.name or self.image})"


@dataclass(frozen=True)
class PowerCycle:
    """Powers ``f^0, f^1, ...`` of a self-map: ``tables[k]`` for ``k < len``,
    then periodic with period ``period`` from ``start`` on."""

    tables: tuple
    start: int
    period: int

    def reduce(self, k):
        if k < len(self.tables):
            return k
        return self.start + (k - self.start) % self.period

    def __getitem__(self, k):
        return self.tables[self.reduce(k)]


def power_cycle(table):
    n = len(table)
    seen = {}
    tables = []
    cur = tuple(range(n))
    while cur not in seen:
        seen[cur] = len(tables)
        tables.append(cur)
        cur = tuple(table[x] for x in cur)
    start = seen[cur]
    return PowerCycle(tuple(np.array(t) for t in tables), start, len(tables) - start)


def _compose_words(cycles, bound):
    """All ``f_1^{a_1} o ... o f_n^{a_n}`` over representative exponents."""
    total = 1
    for c in cycles:
        total *= len(c.tables)
    if total > bound:
        raise ClosureBoundExceeded(f"{total} exponent representatives exceed bound {bound}")
    words = {}
    for alpha in itertools.product(*(range(len(c.tables)) for c in cycles)):
        t = np.arange(len(cycles[0].tables[0]))
        for c, a in zip(reversed(cycles), reversed(alpha)):
            t = c.tables[a][t]
        words[alpha] = t
    return words


@dataclass
class EndoSystem:
    ring: fr.FiniteRing
    sigmas: tuple
    deltas: tuple
    sigma_cycles: tuple
    delta_cycles: tuple
    sigma_words: dict
    delta_words_by_exp: dict
    warnings: list = field(default_factory=list)

    @property
    def n(self):
        return len(self.sigmas)

    @property
    def sigma_monoid(self):
        """Distinct tables of ``sigma^alpha`` over all ``alpha``."""
        return _distinct(self.sigma_words.values())

    @property
    def delta_words(self):
        """Distinct tables of ``delta^beta`` over all ``beta``."""
        return _distinct(self.delta_words_by_exp.values())


def _distinct(tables):
    out, seen = [], set()
    for t in tables:
        key = tuple(t.tolist())
        if key not in seen:
            seen.add(key)
            out.append(t)
    return tuple(out)


def validate_system(ring, sigmas, deltas, *, closure_bound=MAX_CLOSURE):
    """Check every map, pair each ``delta_i`` with ``sigma_i``, compute closures.

    ``sigmas`` / ``deltas`` may be ``EndoMap`` / ``SigmaDerivation`` objects or
    raw tables.
    """
    sigmas, deltas = list(sigmas), list(deltas)
    if not sigmas or len(sigmas) != len(deltas):
        raise InvalidSpec("need n >= 1 endomorphisms and as many derivations")
    sig = [s if isinstance(s, EndoMap) else EndoMap(ring, s) for s in sigmas]
    dlt = []
    for s, d in zip(sig, deltas):
        if isinstance(d, SigmaDerivation):
            if d.sigma != s:
                raise LawViolation("derivation paired with a different endomorphism", ())
            dlt.append(d)
        else:
            dlt.append(SigmaDerivation(ring, s, d))
    for s in sig:
        if s.ring is not ring:
            raise InvalidSpec("map defined on a different ring")
    warnings = [f"sigma_{i} is not injective (kernel has {ring.order - len(set(s.image))} "
                "more elements than {0}); rewriting stays well defined"
                for i, s in enumerate(sig, 1) if not s.injective]
    sc = tuple(power_cycle(s.image) for s in sig)
    dc = tuple(power_cycle(d.image) for d in dlt)
    return EndoSystem(ring, tuple(sig), tuple(dlt), sc, dc,
                      _compose_words(sc, closure_bound), _compose_words(dc, closure_bound),
                      warnings)


def _power(cycles, exps):
    if len(exps) != len(cycles) or any(e < 0 for e in exps):
        raise ValueError(f"exponent vector {exps!r} must have {len(cycles)} entries >= 0")
    t = np.arange(len(cycles[0].tables[0]))
    for c, a in zip(reversed(cycles), reversed(tuple(exps))):
        t = c[a][t]
    return t


def sigma_power(sys, alpha):
    """``sigma_1^a1 o ... o sigma_n^an`` as an ``EndoMap``."""
    return EndoMap(sys.ring, _power(sys.sigma_cycles, alpha), name=f"sigma^{tuple(alpha)}")


def delta_power(sys, beta):
    """``delta_1^b1 o ... o delta_n^bn`` as a table."""
    return _power(sys.delta_cycles, beta)


# -- maps by name -------------------------------------------------------------------

def named_map(ring, spec):
    """Table for a map description (``{"name": ...}`` or ``{"table": [...]}``)."""
    if not isinstance(spec, dict):
        raise InvalidSpec(f"map description must be an object, got {spec!r}")
    if "table" in spec:
        t = spec["table"]
        if not isinstance(t, list) or len(t) != ring.order:
            raise InvalidSpec(f"map table must list {ring.order} indices")
        return [int(x) for x in t]
    name = spec.get("name")
    idx = list(ring.elements())
    if name == "identity":
        return idx
    if name == "zero":
        return [ring.zero] * ring.order
    if name in ("ut2_diag", "ut2_strict_upper_delta"):
        if ring.family != "ut2":
            raise InvalidSpec(f"{name} needs a ut2 ring")
        z = ring.params["base"].zero
        if name == "ut2_diag":
            return [ring.from_coords((a, z, c)) for a, _, c in map(ring.coords, idx)]
        return [ring.from_coords((z, b, z)) for _, b, _ in map(ring.coords, idx)]
    if name in ("s2_negate_b", "s2_zero_b"):
        if ring.family != "s2":
            raise InvalidSpec(f"{name} needs an s2 ring")
        base = ring.params["base"]
        if name == "s2_negate_b":
            return [ring.from_coords((a, base.neg(b))) for a, b in map(ring.coords, idx)]
        return [ring.from_coords((a, base.zero)) for a, _ in map(ring.coords, idx)]
    raise InvalidSpec(f"unknown map {spec!r}")


# -- compatibility --------------------------------------------------------------------

@dataclass
class CompatibilityReport:
    sigma_compatible: bool
    delta_compatible: bool
    weak_sigma_compatible: bool
    weak_delta_compatible: bool
    sigma_rigid: bool
    witnesses: dict

    @property
    def weak_compatible(self):
        return self.weak_sigma_compatible and self.weak_delta_compatible

    @property
    def compatible(self):
        return self.sigma_compatible and self.delta_compatible

    def as_dict(self):
        return {"sigma_compatible": self.sigma_compatible,
                "delta_compatible": self.delta_compatible,
                "weak_sigma_compatible": self.weak_sigma_compatible,
                "weak_delta_compatible": self.weak_delta_compatible,
                "sigma_rigid": self.sigma_rigid,
                "witnesses": {k: list(v) for k, v in self.witnesses.items()}}


def _mask(R, elements):
    m = np.zeros(R.order, dtype=bool)
    m[sorted(elements)] = True
    return m


def compat_counterexamples(sys, kind):
    """Yield every ``(a, b, exponent)`` violating the named condition, in canonical order.

    ``kind`` is one of ``sigma``, ``delta``, ``weak_sigma``, ``weak_delta``.
    """
    R = sys.ring
    M = R.mul_table
    if kind in ("sigma", "delta"):
        good = M == R.zero
        target = lambda X: X == R.zero  # noqa: E731
    elif kind in ("weak_sigma", "weak_delta"):
        nil = _mask(R, fr.nilpotents(R))
        good = nil[M]
        target = lambda X: nil[X]  # noqa: E731
    else:
        raise ValueError(f"unknown compatibility kind {kind!r}")
    words = sys.sigma_words if kind.endswith("sigma") else sys.delta_words_by_exp
    hits = []
    for exp, t in words.items():
        mapped = target(M[:, t])  # a * f(b)
        bad = (mapped != good) if kind.endswith("sigma") else (good & ~mapped)
        for a, b in np.argwhere(bad):
            hits.append((int(a), int(b), exp))
    hits.sort()
    yield from hits


def _rigid_witness(sys):
    R = sys.ring
    M = R.mul_table
    idx = np.arange(R.order)
    for exp, t in sorted(sys.sigma_words.items()):
        bad = (M[idx, t] == R.zero) & (idx != R.zero)
        if bad.any():
            return (int(np.flatnonzero(bad)[0]), exp)
    return None


def compatibility_report(sys):
    witnesses = {}
    flags = {}
    for kind in ("sigma", "delta", "weak_sigma", "weak_delta"):
        w = next(compat_counterexamples(sys, kind), None)
        flags[kind] = w is None
        if w is not None:
            witnesses[kind] = w
    rw = _rigid_witness(sys)
    if rw is not None:
        witnesses["sigma_rigid"] = rw
    return CompatibilityReport(flags["sigma"], flags["delta"], flags["weak_sigma"],
                               flags["weak_delta"], rw is None, witnesses)


@dataclass
class ConsequenceItem:
    item: int
    statement: str
    passed: bool
    witness: tuple = None


def weak_compat_consequences(sys):
    """Exhaustively test the four standard consequences of weak compatibility.

    1. ``ab in N`` implies ``a sigma^alpha(b)`` and ``sigma^beta(a) b`` in N.
    2. ``sigma^alpha(a) b in N`` implies ``ab in N``.
    3. ``a sigma^beta(b) in N`` implies ``ab in N``.
    4. ``ab in N`` implies ``sigma^alpha(a) delta^beta(b)`` and
       ``delta^beta(a) sigma^alpha(b)`` in N.
    """
    R = sys.ring
    M = R.mul_table
    nil = _mask(R, fr.nilpotents(R))
    ab = nil[M]
    S = list(sys.sigma_words.items())
    D = list(sys.delta_words_by_exp.items())

    def first_failure(pairs):
        for tag, bad in pairs:
            if bad.any():
                a, b = _first(bad)
                return (a, b, *tag)
        return None

    checks = [
        (1, "ab in N(R) => a sigma^alpha(b), sigma^beta(a) b in N(R)",
         ((("alpha", e), ab & ~nil[M[:, t]]) for e, t in S),
         ((("beta", e), ab & ~nil[M[t, :]]) for e, t in S)),
        (2, "sigma^alpha(a) b in N(R) => ab in N(R)",
         ((("alpha", e), nil[M[t, :]] & ~ab) for e, t in S),),
        (3, "a sigma^beta(b) in N(R) => ab in N(R)",
         ((("beta", e), nil[M[:, t]] & ~ab) for e, t in S),),
        (4, "ab in N(R) => sigma^alpha(a) delta^beta(b), delta^beta(a) sigma^alpha(b) in N(R)",
         ((("alpha", es, "beta", ed), ab & ~nil[M[np.ix_(ts, td)]]) for es, ts in S for ed, td in D),
         ((("alpha", es, "beta", ed), ab & ~nil[M[np.ix_(td, ts)]]) for es, ts in S for ed, td in D)),
    ]
    out = []
    for item, text, *gens in checks:
        w = None
        for g in gens:
            w = first_failure(g)
            if w is not None:
                break
        out.append(ConsequenceItem(item, text, w is None, w))
    return out


# -- invariant ideals and quotients -------------------------------------------------------

@dataclass(frozen=True)
class Invariance:
    sigma_invariant: bool
    delta_invariant: bool

    @property
    def invariant(self):
        return self.sigma_invariant and self.delta_invariant


def ideal_invariance(sys, I):
    elems = I.elements if isinstance(I, fr.IdealDescriptor) else frozenset(I)
    if not fr.is_ideal(sys.ring, elems):
        raise ValueError("ideal_invariance needs a two-sided ideal")
    mask = _mask(sys.ring, elems)
    idx = sorted(elems)
    return Invariance(all(mask[t[idx]].all() for t in sys.sigma_monoid),
                      all(mask[t[idx]].all() for t in sys.delta_words))


def quotient_system(sys, I):
    """Induced system on ``R/I``.  Returns ``(quotient ring, system, projection)``."""
    R = sys.ring
    elems = I.elements if isinstance(I, fr.IdealDescriptor) else frozenset(I)
    inv = ideal_invariance(sys, elems)
    if not inv.invariant:
        raise NotInvariant(f"ideal {sorted(elems)} is not (Sigma, Delta)-invariant: {inv}")
    Q, proj = fr.quotient_ring(R, elems)
    reps = [proj.index(c) for c in range(Q.order)]
    p = np.array(proj)

    def induced(table):
        t = np.asarray(table)
        # well-defined: a - b in I implies f(a) - f(b) in I
        if (p[t] != p[t[np.array([reps[c] for c in proj])]]).any():
            raise NotInvariant("induced map is not well defined on cosets")
        return p[t[np.array(reps)]]

    sig = [EndoMap(Q, induced(s.table), name=s.name and f"{s.name} mod I") for s in sys.sigmas]
    dlt = [SigmaDerivation(Q, s, induced(d.table)) for s, d in zip(sig, sys.deltas)]
    return Q, validate_system(Q, sig, dlt), proj
