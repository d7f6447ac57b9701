"""Brute-force verifiers that decide element properties by direct search in ``A``.

Nothing here consults the coefficient criteria in ``classifiers``; every
positive answer carries a witness that is re-checked with the rewriting
engine alone.  Searches are bounded, so a negative answer is only ever
``false_up_to_bound``.

Searches for ``g`` with ``phi(g) = target`` exploit that the maps used here
(``g -> f g``, ``g -> g f``, ``g -> F g F``) are additive: the image of every
single term ``c x^m`` is computed once, and all coefficient assignments are
then summed with the ring's addition table in one vectorised pass.
"""

import itertools
import random
from dataclasses import asdict, dataclass, field

import numpy as np

from . import classifiers as cl
from . import finite_rings as fr
from .errors import ResourceBoundExceeded
from .pbw import monomials_up_to, multiply, power

FOUND, NOT_FOUND = "true", "false_up_to_bound"


@dataclass(frozen=True)
class SearchBounds:
    max_degree: int = 3
    max_power: int = None
    max_candidates: int = 65536
    seed: int = None
    sweep_degree: int = 1

    def __post_init__(self):
        for name in ("max_degree", "max_candidates", "sweep_degree"):
            if getattr(self, name) < 0 or (name == "max_candidates" and self.max_candidates < 1):
                raise ValueError(f"{name} must be positive")
        if self.max_power is not None and self.max_power < 1:
            raise ValueError("max_power must be positive")

    def power_bound(self, ring):
        return self.max_power if self.max_power is not None else 2 * ring.order

    def as_dict(self):
        return asdict(self)


@dataclass
class OracleResult:
    value: str
    witness: object = None
    detail: dict = field(default_factory=dict)

    @property
    def found(self):
        return self.value == FOUND

    def to_json(self):
        w = self.witness
        if hasattr(w, "to_text"):
            w = w.to_text()
        elif isinstance(w, dict):
            w = {k: (v.to_text() if hasattr(v, "to_text") else v) for k, v in w.items()}
        return {"value": self.value, "witness": w, "detail": self.detail}


def _cap(*polys):
    """Degree cap large enough for a product of the given factors."""
    return sum(max(p.degree, 0) for p in polys) + 1


# -- additive search --------------------------------------------------------------------

def _dense(polys, index, R):
    v = np.full(len(index), R.zero, dtype=np.int64)
    for p in polys:
        for m, c in p.terms.items():
            v[index[m]] = R.add(int(v[index[m]]), c)
    return v


def additive_search(spec, phi, target, degree, max_candidates):
    """First ``g`` of degree ``<= degree`` (canonical order) with ``phi(g) == target``.

    ``phi`` maps a ``SkewPoly`` to a tuple of ``SkewPoly`` and must be additive.
    Degrees are tried in increasing order; returns ``(g or None, searched_degree)``.
    """
    R = spec.base
    searched = -1
    for D in range(degree + 1):
        monos = monomials_up_to(spec.n, D)
        if R.order ** len(monos) > max_candidates:
            break
        images = [[phi(spec.poly({m: c})) for c in R.elements()] for m in monos]
        keys = set()
        for row in images:
            for tup in row:
                for k, p in enumerate(tup):
                    keys.update((k, m) for m in p.terms)
        for k, p in enumerate(target):
            keys.update((k, m) for m in p.terms)
        index = {key: i for i, key in enumerate(sorted(keys))}

        def vec(tup):
            v = np.full(len(index), R.zero, dtype=np.int64)
            for k, p in enumerate(tup):
                for m, c in p.terms.items():
                    v[index[(k, m)]] = c
            return v

        tvec = vec(target)
        S = np.stack([vec(t) for t in images[0]])
        for row in images[1:]:
            img = np.stack([vec(t) for t in row])
            S = R.add_table[S[:, None, :], img[None, :, :]].reshape(-1, len(index))
        hits = np.flatnonzero((S == tvec).all(axis=1))
        searched = D
        if hits.size:
            h = int(hits[0])
            coeffs = []
            for _ in monos:
                coeffs.append(h % R.order)
                h //= R.order
            return spec.from_coefficients(monos, reversed(coeffs)), D
    return None, searched


# -- oracles ------------------------------------------------------------------------------

def oracle_nilpotent(f, bounds=SearchBounds()):
    """Least ``k <= max_power`` with ``f^k = 0``."""
    kmax = bounds.power_bound(f.spec.base)
    cap = kmax * max(f.degree, 1)
    p = f.spec.one()
    for k in range(1, kmax + 1):
        p = multiply(p, f, cap)
        if p.is_zero():
            return OracleResult(FOUND, k, {"power": k})
    return OracleResult(NOT_FOUND, None, {"max_power": kmax})


def _verify_inverse(f, g):
    one = f.spec.one()
    cap = _cap(f, g)
    return multiply(f, g, cap) == one and multiply(g, f, cap) == one


def _geometric_inverse(f, bounds):
    spec, R = f.spec, f.spec.base
    u = f.constant_coeff
    if u not in fr.units(R):
        return None
    uinv = spec.const(fr.inverse(R, u))
    k = multiply(uinv, f - spec.const(u), _cap(f))
    series, term = spec.one(), spec.one()
    kmax = bounds.power_bound(R)
    cap = kmax * max(k.degree, 1) + 1
    for _ in range(kmax):
        term = multiply(term, -k, cap)
        if term.is_zero():
            g = multiply(series, uinv, cap)
            return g if _verify_inverse(f, g) else None
        series = series + term
    return None


def oracle_unit(f, bounds=SearchBounds()):
    """Two-sided inverse by geometric series, then exhaustive search."""
    spec = f.spec
    g = _geometric_inverse(f, bounds)
    if g is not None:
        return OracleResult(FOUND, g, {"strategy": "geometric_series"})
    one = spec.one()

    def phi(g):
        cap = _cap(f, g)
        return (multiply(f, g, cap), multiply(g, f, cap))

    g, searched = additive_search(spec, phi, (one, one), bounds.max_degree, bounds.max_candidates)
    if g is not None and _verify_inverse(f, g):
        return OracleResult(FOUND, g, {"strategy": "exhaustive", "degree": g.degree})
    return OracleResult(NOT_FOUND, None, {"searched_degree": searched})


def oracle_idempotent(f, bounds=None):
    cap = _cap(f, f)
    ok = multiply(f, f, cap) == f
    return OracleResult(FOUND if ok else NOT_FOUND, f if ok else None, {"exact": True})


def _regular_search(F, bounds):
    spec = F.spec

    def phi(g):
        cap = _cap(F, g, F)
        return (multiply(multiply(F, g, cap), F, cap),)

    return additive_search(spec, phi, (F,), bounds.max_degree, bounds.max_candidates)


def oracle_vnr(f, bounds=SearchBounds()):
    """``g`` with ``f g f = f``."""
    g, searched = _regular_search(f, bounds)
    if g is not None:
        return OracleResult(FOUND, g, {"degree": max(g.degree, 0)})
    return OracleResult(NOT_FOUND, None, {"searched_degree": searched})


def oracle_pi_regular(f, bounds=SearchBounds()):
    """Least ``m <= max_power`` and ``g`` with ``f^m g f^m = f^m``."""
    kmax = bounds.power_bound(f.spec.base)
    cap = kmax * max(f.degree, 1)
    searched = -1
    for m in range(1, kmax + 1):
        F = power(f, m, cap)
        g, searched = _regular_search(F, bounds)
        if g is not None:
            return OracleResult(FOUND, {"m": m, "g": g}, {"m": m})
    return OracleResult(NOT_FOUND, None, {"max_power": kmax, "searched_degree": searched})


def oracle_vnl(f, bounds=SearchBounds()):
    r = oracle_vnr(f, bounds)
    if r.found:
        return OracleResult(FOUND, {"side": "f", "g": r.witness}, r.detail)
    r = oracle_vnr(f.spec.one() - f, bounds)
    if r.found:
        return OracleResult(FOUND, {"side": "1-f", "g": r.witness}, r.detail)
    return OracleResult(NOT_FOUND, None, r.detail)


def idempotents_up_to(spec, bounds=SearchBounds()):
    """Exhaustive ``e*e == e`` sweep; returns ``(idempotents, degree reached)``."""
    key = ("idempotents", bounds.max_degree, bounds.max_candidates)
    cache = spec.__dict__.setdefault("_oracle_cache", {})
    if key not in cache:
        R = spec.base
        found, reached = [], -1
        for D in range(bounds.max_degree + 1):
            monos = spec.monomials(D)
            if R.order ** len(monos) > bounds.max_candidates:
                break
            reached = D
        if reached >= 0:
            monos = spec.monomials(reached)
            for combo in itertools.product(R.elements(), repeat=len(monos)):
                e = spec.from_coefficients(monos, combo)
                if multiply(e, e, _cap(e, e)) == e:
                    found.append(e)
        cache[key] = (found, reached)
    return cache[key]


def oracle_clean(f, bounds=SearchBounds()):
    """Idempotent ``e`` (from the bounded sweep) with ``f - e`` a unit."""
    idems, reached = idempotents_up_to(f.spec, bounds)
    for e in idems:
        r = oracle_unit(f - e, bounds)
        if r.found:
            return OracleResult(FOUND, {"e": e, "u": f - e, "u_inverse": r.witness},
                                {"idempotent_degree": reached})
    return OracleResult(NOT_FOUND, None, {"idempotent_degree": reached,
                                          "idempotents": len(idems)})


ORACLES = {
    "units": oracle_unit,
    "nilpotents": oracle_nilpotent,
    "idempotents": oracle_idempotent,
    "vnr": oracle_vnr,
    "pi_regular": oracle_pi_regular,
    "vnl": oracle_vnl,
    "clean": oracle_clean,
}

CLASSIFIERS = {
    "units": cl.is_unit_in_A,
    "nilpotents": cl.is_nilpotent_in_A,
    "idempotents": cl.idempotent_shape,
    "vnr": cl.is_vnr_in_A,
    "pi_regular": cl.is_pi_regular_in_A,
    "vnl": cl.is_vnl_in_A,
    "clean": cl.is_clean_in_A,
}

GATES = {
    "units": cl.BASIC, "nilpotents": cl.NILP, "product_nil": cl.NILP, "idempotents": cl.ABELIAN,
    "vnr": cl.ABELIAN, "pi_regular": cl.ABELIAN, "vnl": cl.ABELIAN, "clean": cl.ABELIAN,
}

THEOREMS = tuple(GATES)


def verify_witness(theorem, f, result):
    """Re-check an oracle witness with the engine only."""
    if not result.found:
        return True
    spec, w = f.spec, result.witness
    one = spec.one()
    if theorem == "units":
        return _verify_inverse(f, w)
    if theorem == "nilpotents":
        return power(f, w, w * max(f.degree, 1)).is_zero()
    if theorem == "idempotents":
        return multiply(f, f, _cap(f, f)) == f
    if theorem == "vnr":
        return multiply(multiply(f, w, _cap(f, w)), f, _cap(f, w, f)) == f
    if theorem == "pi_regular":
        F = power(f, w["m"], w["m"] * max(f.degree, 1))
        cap = _cap(F, w["g"], F)
        return multiply(multiply(F, w["g"], cap), F, cap) == F
    if theorem == "vnl":
        h = f if w["side"] == "f" else one - f
        return multiply(multiply(h, w["g"], _cap(h, w["g"])), h, _cap(h, w["g"], h)) == h
    if theorem == "clean":
        e, u = w["e"], w["u"]
        return e + u == f and multiply(e, e, _cap(e, e)) == e and _verify_inverse(u, w["u_inverse"])
    raise ValueError(f"unknown theorem {theorem!r}")


# -- crosschecks ---------------------------------------------------------------------------

@dataclass
class CrosscheckReport:
    theorem: str
    swept: int = 0
    agreements: int = 0
    counterexamples: list = field(default_factory=list)
    unconfirmed: list = field(default_factory=list)
    bounds: dict = field(default_factory=dict)
    seed: int = None
    coverage: str = "exhaustive"
    hypotheses_unsatisfied: list = field(default_factory=list)
    positives: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.hypotheses_unsatisfied and not self.counterexamples

    def to_json(self):
        out = {"theorem": self.theorem, "swept": self.swept, "agreements": self.agreements,
               "counterexamples": self.counterexamples, "unconfirmed": self.unconfirmed,
               "bounds": self.bounds, "seed": self.seed, "coverage": self.coverage}
        if self.hypotheses_unsatisfied:
            out["hypotheses_unsatisfied"] = self.hypotheses_unsatisfied
        if self.theorem == "idempotents":
            out["idempotents_found"] = self.positives
        return out


def sweep_elements(spec, degree, max_candidates, seed):
    """All elements of degree ``<= degree``, or a seeded sample when there are too many."""
    monos = spec.monomials(degree)
    R = spec.base
    total = R.order ** len(monos)
    if total <= max_candidates:
        elems = (spec.from_coefficients(monos, c)
                 for c in itertools.product(R.elements(), repeat=len(monos)))
        return elems, "exhaustive", total
    if seed is None:
        raise ResourceBoundExceeded(
            f"{total} candidates exceed max_candidates={max_candidates}; pass a seed to sample")
    rng = random.Random(seed)
    elems = [spec.from_coefficients(monos, [rng.randrange(R.order) for _ in monos])
             for _ in range(max_candidates)]
    return iter(elems), f"sampled {max_candidates} of {total}", max_candidates


def _product_nil_case(spec, pair, bounds, classifier):
    f, g = pair
    verdict = classifier(f, g)
    fg = multiply(f, g, _cap(f, g))
    return verdict, oracle_nilpotent(fg, bounds), fg


def theorem_crosscheck(spec, theorem, bounds=SearchBounds(), classifier=None):
    """Compare a coefficient classifier with its oracle on a degree sweep.

    A counterexample is recorded only when the oracle holds a verified
    witness against a ``false`` verdict; ``true`` verdicts the oracle cannot
    confirm within bounds go to ``unconfirmed``.
    """
    if theorem not in GATES:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {THEOREMS}")
    report = CrosscheckReport(theorem, bounds=bounds.as_dict(), seed=bounds.seed)
    missing = cl.hypothesis_profile(spec).missing(GATES[theorem])
    if missing:
        report.hypotheses_unsatisfied = list(missing)
        report.coverage = "none"
        return report
    elems, coverage, _ = sweep_elements(spec, bounds.sweep_degree, bounds.max_candidates, bounds.seed)
    if theorem == "product_nil":
        elems = list(elems)
        cases = itertools.product(elems, elems)
        coverage = coverage + " (pairs)"
    else:
        cases = elems
    report.coverage = coverage
    for case in cases:
        if theorem == "product_nil":
            verdict, result, shown = _product_nil_case(spec, case, bounds,
                                                       classifier or cl.product_in_nil)
            label = f"({case[0]})*({case[1]})"
            ok_witness = verify_witness("nilpotents", shown, result)
        else:
            f = case
            verdict = (classifier or CLASSIFIERS[theorem])(f)
            result = ORACLES[theorem](f, bounds)
            label = f.to_text()
            ok_witness = verify_witness(theorem, f, result)
        report.swept += 1
        if not ok_witness:
            raise AssertionError(f"oracle witness for {label} failed re-verification")
        if verdict.value == cl.UNSAT:
            report.unconfirmed.append({"element": label, "classifier": verdict.value})
            continue
        if (verdict.value == cl.TRUE) == result.found:
            report.agreements += 1
            if result.found and theorem == "idempotents":
                report.positives.append(label)
        elif result.found:
            report.counterexamples.append({"element": label, "classifier": verdict.value,
                                           "oracle": result.to_json()})
        else:
            report.unconfirmed.append({"element": label, "classifier": verdict.value,
                                       "oracle": result.to_json()})
    return report


def units_set_identity(spec, degree=1, max_candidates=65536):
    """Double inclusion of ``U(A)`` and ``U(R) + N(R)A`` on the degree sweep.

    ``U(A)`` is taken from the inverse oracle; ``U(R) + N(R)A`` is built
    constructively as ``u + h`` over ``u in U(R)`` and ``h`` with nilpotent
    coefficients.  Returns ``(oracle_set, constructed_set)`` of texts.
    """
    R = spec.base
    elems, _, _ = sweep_elements(spec, degree, max_candidates, None)
    bounds = SearchBounds(max_candidates=max_candidates)
    oracle_units = {f for f in elems if oracle_unit(f, bounds).found}
    monos = spec.monomials(degree)
    N = sorted(fr.nilpotents(R))
    constructed = set()
    for u in sorted(fr.units(R)):
        for combo in itertools.product(N, repeat=len(monos)):
            constructed.add(spec.const(u) + spec.from_coefficients(monos, combo))
    return oracle_units, constructed
