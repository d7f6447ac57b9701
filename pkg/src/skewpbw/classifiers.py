"""Coefficient-level classification of elements of a skew PBW extension.

Under weak (Sigma, Delta)-compatibility plus NI (and, for most element
types, Abelian) base rings, membership of ``f = sum a_i X_i`` in the units,
nilpotents, idempotents, von Neumann regular, pi-regular, von Neumann local
and clean elements of ``A`` is decided by conditions on the coefficients
``a_i`` alone.  Each classifier checks its hypotheses first and refuses with
``hypotheses_unsatisfied`` rather than guessing.
"""

import itertools
import random
from dataclasses import dataclass, field

from . import finite_rings as fr
from .errors import PreconditionUnmet
from .pbw import multiply
from .sigma_delta import compatibility_report

TRUE, FALSE, UNSAT = "true", "false", "hypotheses_unsatisfied"


@dataclass(frozen=True)
class HypothesisProfile:
    weak_compatible: bool
    NI: bool
    abelian: bool
    reduced: bool
    d_central_invertible: bool
    sigma_rigid: bool = False

    def missing(self, needs):
        return tuple(h for h in needs if not getattr(self, h))

    def as_dict(self):
        return {"weak_compatible": self.weak_compatible, "NI": self.NI,
                "NI_of_extension": self.weak_compatible and self.NI,
                "abelian": self.abelian, "reduced": self.reduced,
                "d_central_invertible": self.d_central_invertible,
                "sigma_rigid": self.sigma_rigid}


@dataclass
class Verdict:
    value: str
    theorem: str
    witness: dict = field(default_factory=dict)
    missing: tuple = ()

    @property
    def is_true(self):
        return self.value == TRUE

    def to_json(self):
        out = {"value": self.value, "theorem": self.theorem, "witness": self.witness}
        if self.missing:
            out["missing_hypotheses"] = list(self.missing)
        return out


def hypothesis_profile(spec):
    prof = getattr(spec, "_profile", None)
    if prof is None:
        R = spec.base
        rep = fr.ring_class_report(R)
        compat = compatibility_report(spec.system)
        Z, U = fr.center(R), fr.units(R)
        prof = HypothesisProfile(
            weak_compatible=compat.weak_compatible,
            NI=rep.NI,
            abelian=rep.abelian,
            reduced=rep.reduced,
            d_central_invertible=all(v in Z and v in U for v in spec.d.values()),
            sigma_rigid=compat.sigma_rigid,
        )
        spec._profile = prof
    return prof


BASIC = ("weak_compatible", "NI")
NILP = ("weak_compatible", "NI", "d_central_invertible")
ABELIAN = ("weak_compatible", "NI", "abelian")


def _gate(spec, theorem, needs):
    missing = hypothesis_profile(spec).missing(needs)
    if missing:
        return Verdict(UNSAT, theorem, {}, missing)
    return None


def _lit(R, a):
    return R.format_element(a)


def _verdict(ok, theorem, witness=None):
    return Verdict(TRUE if ok else FALSE, theorem, witness or {})


def _all_nil(R, coeffs):
    N = fr.nilpotents(R)
    return all(c in N for c in coeffs)


def is_nilpotent_in_A(f):
    """``f`` is nilpotent iff every coefficient is nilpotent in ``R``."""
    spec, R = f.spec, f.spec.base
    if (v := _gate(spec, "nilpotents", NILP)):
        return v
    coeffs = [c for _, c in f.items()]
    return _verdict(_all_nil(R, coeffs), "nilpotents",
                    {"coefficients": [_lit(R, c) for c in coeffs]})


def product_in_nil(f, g):
    """``fg`` is nilpotent iff every ``a_i b_j`` is nilpotent."""
    spec, R = f.spec, f.spec.base
    if (v := _gate(spec, "product_nil", NILP)):
        return v
    N = fr.nilpotents(R)
    for (m, a), (k, b) in itertools.product(f.items(), g.items()):
        if R.mul(a, b) not in N:
            return _verdict(False, "product_nil", {"a": _lit(R, a), "b": _lit(R, b),
                                                   "monomials": [list(m), list(k)]})
    return _verdict(True, "product_nil")


def unit_decomposition(f):
    """Split ``f = u + h`` with ``u`` the constant term; ``None`` if the shape fails."""
    R = f.spec.base
    a0 = f.constant_coeff
    if a0 in fr.units(R) and _all_nil(R, f.higher_coeffs()):
        return a0, f - f.spec.const(a0)
    return None


def is_unit_in_A(f):
    """``f`` is a unit iff ``a_0`` is a unit and the other coefficients are nilpotent."""
    spec, R = f.spec, f.spec.base
    if (v := _gate(spec, "units", BASIC)):
        return v
    dec = unit_decomposition(f)
    if dec is None:
        return _verdict(False, "units", {"constant": _lit(R, f.constant_coeff)})
    u, h = dec
    return _verdict(True, "units", {"unit": _lit(R, u), "nilpotent_part": h.to_text()})


def constant_product_consequence(f, g):
    """If ``fg`` is a constant and ``b_0`` a unit, the higher ``a_i`` are nilpotent.

    Raises ``PreconditionUnmet`` when ``fg`` is not constant or ``b_0`` is not a unit.
    """
    spec, R = f.spec, f.spec.base
    if (v := _gate(spec, "constant_product", BASIC)):
        return v
    if f.is_zero() or g.is_zero():
        raise PreconditionUnmet("f and g must be nonzero")
    fg = multiply(f, g)
    if not fg.is_constant():
        raise PreconditionUnmet(f"fg = {fg} is not in R")
    if g.constant_coeff not in fr.units(R):
        raise PreconditionUnmet(f"b0 = {_lit(R, g.constant_coeff)} is not a unit")
    N = fr.nilpotents(R)
    bad = [(list(m), _lit(R, c)) for m, c in f.items() if any(m) and c not in N]
    if bad:
        return Verdict(FALSE, "constant_product", {"falsification": True, "offending": bad})
    return _verdict(True, "constant_product", {"product": fg.to_text()})


def is_idempotent_in_A(f):
    """Decided directly from ``f * f == f``."""
    return _verdict(multiply(f, f) == f, "idempotent_exact")


def _lift_idempotent(R, a0):
    N = fr.nilpotents(R)
    for e in sorted(fr.idempotents(R)):
        if R.sub(a0, e) in N:
            return e
    return None


def idempotent_shape(f):
    """Coefficient form of idempotency.

    Abelian base: exact (``f`` idempotent iff ``f = a_0`` with ``a_0`` idempotent).
    Otherwise only the necessary condition is available: ``false`` when it
    fails, ``hypotheses_unsatisfied`` (with the condition recorded) when it holds.
    """
    spec, R = f.spec, f.spec.base
    if (v := _gate(spec, "idempotents", BASIC)):
        return v
    prof = hypothesis_profile(spec)
    if prof.abelian:
        ok = f.is_constant() and f.constant_coeff in fr.idempotents(R)
        w = {"e": _lit(R, f.constant_coeff)} if ok else {}
        return Verdict(TRUE if ok else FALSE, "idempotents", dict(w, mode="exact"))
    e = _lift_idempotent(R, f.constant_coeff)
    necessary = e is not None and _all_nil(R, f.higher_coeffs())
    if not necessary:
        return Verdict(FALSE, "idempotents", {"mode": "necessary"})
    return Verdict(UNSAT, "idempotents",
                   {"mode": "necessary", "necessary_condition": True, "e": _lit(R, e)},
                   ("abelian",))


def idempotent_centrality(spec, e):
    """An idempotent of an Abelian NI weak-compatible base is central in ``A``."""
    R = spec.base
    if e not in fr.idempotents(R):
        raise PreconditionUnmet(f"{_lit(R, e)} is not idempotent")
    if (v := _gate(spec, "idempotent_centrality", BASIC)):
        return v
    N = fr.nilpotents(R)
    rows = []
    for i, (s, d) in enumerate(zip(spec.system.sigmas, spec.system.deltas), 1):
        u = R.sub(s(e), e)
        rows.append({"i": i, "sigma_e": _lit(R, s(e)), "u": _lit(R, u), "u_nilpotent": u in N,
                     "delta_e": _lit(R, d(e)), "delta_e_nilpotent": d(e) in N})
    if not hypothesis_profile(spec).abelian:
        return Verdict(UNSAT, "idempotent_centrality", {"decomposition": rows}, ("abelian",))
    central = all(s(e) == e and d(e) == R.zero
                  for s, d in zip(spec.system.sigmas, spec.system.deltas))
    return _verdict(central, "idempotent_centrality", {"decomposition": rows})


def nilpotent_correction_lemma(R, e, s):
    """``e``, ``e + s`` idempotent, ``s`` nilpotent commuting with ``e`` forces ``s = 0``."""
    if e not in fr.idempotents(R):
        raise PreconditionUnmet(f"{_lit(R, e)} is not idempotent")
    if s not in fr.nilpotents(R):
        raise PreconditionUnmet(f"{_lit(R, s)} is not nilpotent")
    if R.mul(e, s) != R.mul(s, e):
        raise PreconditionUnmet("e and s do not commute")
    if R.add(e, s) not in fr.idempotents(R):
        raise PreconditionUnmet(f"e + s = {_lit(R, R.add(e, s))} is not idempotent")
    if s != R.zero:
        return Verdict(FALSE, "correction_lemma", {"falsification": True, "s": _lit(R, s)})
    return _verdict(True, "correction_lemma")


def _vnr_shape(f):
    R = f.spec.base
    a0, tail = f.constant_coeff, f.higher_coeffs()
    N = fr.nilpotents(R)
    for e in sorted(fr.idempotents(R)):
        eN = {R.mul(e, x) for x in N}
        if not all(c in eN for c in tail):
            continue
        for u in sorted(fr.units(R)):
            if R.mul(u, e) == a0:
                return u, e
    return None


def is_vnr_in_A(f):
    """``a_0 = u e`` and every other coefficient in ``e N(R)``."""
    spec, R = f.spec, f.spec.base
    if (v := _gate(spec, "vnr", ABELIAN)):
        return v
    w = _vnr_shape(f)
    if w is None:
        return _verdict(False, "vnr")
    return _verdict(True, "vnr", {"u": _lit(R, w[0]), "e": _lit(R, w[1])})


def badawi_decomposition(R, r):
    """Abelian ``R``: ``r`` pi-regular iff ``er = eu`` and ``(1-e)r`` nilpotent."""
    if not fr.ring_class_report(R).abelian:
        return Verdict(UNSAT, "badawi", {}, ("abelian",))
    N = fr.nilpotents(R)
    enumerated = r in fr.pi_regular_elements(R)
    for e in sorted(fr.idempotents(R)):
        if R.mul(R.sub(R.one, e), r) not in N:
            continue
        er = R.mul(e, r)
        for u in sorted(fr.units(R)):
            if R.mul(e, u) == er:
                return _verdict(True, "badawi", {"e": _lit(R, e), "u": _lit(R, u),
                                                 "agrees_with_enumeration": enumerated})
    return _verdict(False, "badawi", {"agrees_with_enumeration": not enumerated})


def is_pi_regular_in_A(f):
    spec, R = f.spec, f.spec.base
    if (v := _gate(spec, "pi_regular", ABELIAN)):
        return v
    ok = f.constant_coeff in fr.pi_regular_elements(R) and _all_nil(R, f.higher_coeffs())
    return _verdict(ok, "pi_regular")


def is_vnl_in_A(f):
    """``f`` or ``1 - f`` has the von Neumann regular coefficient shape."""
    spec, R = f.spec, f.spec.base
    if (v := _gate(spec, "vnl", ABELIAN)):
        return v
    for side, g in (("f", f), ("1-f", spec.one() - f)):
        w = _vnr_shape(g)
        if w is not None:
            return _verdict(True, "vnl", {"side": side, "u": _lit(R, w[0]), "e": _lit(R, w[1])})
    return _verdict(False, "vnl")


def is_clean_in_A(f):
    """``a_0`` clean in ``R`` and the other coefficients nilpotent."""
    spec, R = f.spec, f.spec.base
    if (v := _gate(spec, "clean", ABELIAN)):
        return v
    if not _all_nil(R, f.higher_coeffs()):
        return _verdict(False, "clean")
    a0 = f.constant_coeff
    U = fr.units(R)
    for e in sorted(fr.idempotents(R)):
        u = R.sub(a0, e)
        if u in U:
            unit_part = f - spec.const(e)
            return _verdict(True, "clean", {"u": _lit(R, u), "e": _lit(R, e),
                                            "unit_part": unit_part.to_text()})
    return _verdict(False, "clean")


def _coefficient_sweep(spec, monos, values, limit, seed):
    """Every coefficient assignment over ``monos`` from ``values``, or a seeded sample."""
    values = sorted(values)
    total = len(values) ** len(monos)
    if total <= limit:
        for combo in itertools.product(values, repeat=len(monos)):
            yield spec.from_coefficients(monos, combo)
        return
    rng = random.Random(seed)
    for _ in range(limit):
        yield spec.from_coefficients(monos, [rng.choice(values) for _ in monos])


def nj_check(spec, degree_bound=2, *, max_candidates=4096, seed=0):
    """Bounded-degree evidence that ``J(A) = N(A)``.

    Checks that ``1 + f x_n`` is a unit for every ``f`` with nilpotent
    coefficients, and that every ``f`` with a non-nilpotent coefficient is
    pushed out of ``J(A)`` by some ``g`` of degree <= 1 with ``1 + f g`` a non-unit.
    """
    if (v := _gate(spec, "nj", BASIC)):
        return v
    R = spec.base
    N = fr.nilpotents(R)
    monos = spec.monomials(degree_bound)
    xn = spec.x(spec.n)
    one = spec.one()
    failures = []
    nil_checked = 0
    for f in _coefficient_sweep(spec, monos, N, max_candidates, seed):
        nil_checked += 1
        if not is_unit_in_A(one + f * xn).is_true:
            failures.append({"kind": "nil_not_in_J", "f": f.to_text()})
    probes = list(_coefficient_sweep(spec, spec.monomials(1), R.elements(), max_candidates, seed))
    separated = 0
    for f in _coefficient_sweep(spec, monos, R.elements(), max_candidates, seed):
        if _all_nil(R, [c for _, c in f.items()]):
            continue
        if any(not is_unit_in_A(one + f * g).is_true for g in probes):
            separated += 1
        else:
            failures.append({"kind": "not_separated", "f": f.to_text()})
    return Verdict(FALSE if failures else TRUE, "nj",
                   {"degree_bound": degree_bound, "nil_checked": nil_checked,
                    "separated": separated, "failures": failures[:10],
                    "bounded": True})
