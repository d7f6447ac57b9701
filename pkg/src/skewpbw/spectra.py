"""Maximal ideals, Gelfand / strongly harmonic checks, and verdicts about ``A``.

A ring is Gelfand (strongly harmonic) when every ordered pair of distinct
maximal right (two-sided) ideals ``M1, M2`` admits ``r not in M1`` and
``s not in M2`` with ``rRs = 0``.  For the finite base ring this is decided
exhaustively; for the extension ``A`` only theorem-backed refutations are
reported, since ideals of ``A`` cannot be enumerated.
"""

from dataclasses import dataclass, field

import numpy as np

from . import classifiers as cl
from . import finite_rings as fr

REFUTED, UNDETERMINED = "refuted", "undetermined"


def separation_matrix(R, target=None):
    """Boolean matrix ``W[r, s]`` telling whether ``r R s`` lies in ``target``.

    ``target`` defaults to ``{0}``.
    """
    target = frozenset([R.zero]) if target is None else frozenset(target)

    def build():
        inside = np.zeros(R.order, dtype=bool)
        inside[list(target)] = True
        M = R.mul_table
        W = np.empty((R.order, R.order), dtype=bool)
        for r in R.elements():
            # row t of M[M[r]] is (r t) * s over all s
            W[r] = inside[M[M[r]]].all(axis=0)
        return W
    return fr._cached(R, ("separation", target), build)


def maximal_right_ideals(R):
    return list(fr.maximal_ideals(R, "right"))


def maximal_two_sided_ideals(R):
    return list(fr.maximal_ideals(R, "two-sided"))


def separate(R, ideals, W):
    """Witnesses for every ordered pair of distinct ideals, and the pairs that fail."""
    witnesses, failures = {}, []
    for i, M1 in enumerate(ideals):
        out1 = np.array(sorted(set(R.elements()) - M1.elements))
        for j, M2 in enumerate(ideals):
            if i == j:
                continue
            out2 = np.array(sorted(set(R.elements()) - M2.elements))
            hits = np.argwhere(W[np.ix_(out1, out2)])
            if hits.size:
                witnesses[(i, j)] = (int(out1[hits[0][0]]), int(out2[hits[0][1]]))
            else:
                failures.append((i, j))
    return witnesses, failures


def check_witness(R, M1, M2, r, s, target):
    """Post-hoc check of ``r not in M1``, ``s not in M2``, ``rRs`` inside ``target``."""
    return (r not in M1 and s not in M2
            and all(R.mul(R.mul(r, t), s) in target for t in R.elements()))


@dataclass
class SpectrumReport:
    ring: object
    maximal_right_ideals: list
    maximal_two_sided_ideals: list
    gelfand: bool
    strongly_harmonic: bool
    separation_witnesses: dict = field(default_factory=dict)
    harmonic_witnesses: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)

    def as_dict(self):
        R = self.ring
        fmt = R.format_element

        def ideals(lst):
            return [[fmt(a) for a in I] for I in lst]

        def wit(d):
            return [{"pair": [i, j], "r": fmt(r), "s": fmt(s)} for (i, j), (r, s) in sorted(d.items())]

        return {"ring": R.name,
                "maximal_right_ideals": ideals(self.maximal_right_ideals),
                "maximal_two_sided_ideals": ideals(self.maximal_two_sided_ideals),
                "gelfand": self.gelfand, "strongly_harmonic": self.strongly_harmonic,
                "separation_witnesses": wit(self.separation_witnesses),
                "harmonic_witnesses": wit(self.harmonic_witnesses),
                "failures": {k: [list(p) for p in v] for k, v in sorted(self.failures.items())}}


def gelfand_check(R):
    """Exhaustive Gelfand and strongly harmonic test of a finite ring."""
    W = separation_matrix(R)
    zero = {R.zero}
    right = maximal_right_ideals(R)
    both = maximal_two_sided_ideals(R)
    rw, rf = separate(R, right, W)
    hw, hf = separate(R, both, W)
    for ideals, wits in ((right, rw), (both, hw)):
        for (i, j), (r, s) in wits.items():
            assert check_witness(R, ideals[i], ideals[j], r, s, zero)
    return SpectrumReport(R, right, both, not rf, not hf, rw, hw,
                          {"gelfand": rf, "strongly_harmonic": hf})


def mod_radical_gelfand_criterion(spec):
    """Base-level criterion: every pair of distinct maximal right ideals of ``R``
    admits ``r, s`` outside them with ``rRs`` inside ``N(R)``.

    This is decided for the finite base ring only; it is the coefficient
    condition that, over a weak compatible NI base, governs Gelfand-ness of
    ``A/J(A)``.
    """
    gate = cl._gate(spec, "mod_radical_gelfand", cl.BASIC)
    if gate:
        return gate
    R = spec.base
    N = fr.nilpotents(R)
    right = maximal_right_ideals(R)
    wits, fails = separate(R, right, separation_matrix(R, N))
    for (i, j), (r, s) in wits.items():
        assert check_witness(R, right[i], right[j], r, s, N)
    fmt = R.format_element
    witness = {"level": "base ring", "maximal_right_ideals": len(right),
               "vacuous": len(right) < 2,
               "pairs": [{"pair": [i, j], "r": fmt(r), "s": fmt(s)}
                         for (i, j), (r, s) in sorted(wits.items())]}
    if fails:
        witness["failing_pairs"] = [list(p) for p in fails]
    return cl.Verdict(cl.FALSE if fails else cl.TRUE, "mod_radical_gelfand", witness)


@dataclass
class ExtensionVerdicts:
    not_local: object
    not_local_reason: dict
    N_R_prime: object
    N_R_witness: object
    a_mod_j_gelfand_verdict: str
    a_mod_nstar_gelfand_verdict: str
    harmonic_iff_unique_max: str
    hypotheses: dict = field(default_factory=dict)
    missing: tuple = ()

    def as_dict(self):
        out = {"not_local": self.not_local, "not_local_reason": self.not_local_reason,
               "N_R_prime": self.N_R_prime, "N_R_witness": self.N_R_witness,
               "a_mod_j_gelfand_verdict": self.a_mod_j_gelfand_verdict,
               "a_mod_nstar_gelfand_verdict": self.a_mod_nstar_gelfand_verdict,
               "harmonic_iff_unique_max": self.harmonic_iff_unique_max,
               "hypotheses": self.hypotheses}
        if self.missing:
            out["missing_hypotheses"] = list(self.missing)
        return out


def extension_verdicts(spec):
    """Theorem-backed statements about ``A``; refutations only under verified hypotheses."""
    prof = cl.hypothesis_profile(spec)
    checklist = {h: getattr(prof, h) for h in cl.BASIC}
    missing = prof.missing(cl.BASIC)
    if missing:
        return ExtensionVerdicts(cl.UNSAT, {}, cl.UNSAT, None, cl.UNSAT, cl.UNSAT, cl.UNSAT,
                                 checklist, missing)
    R = spec.base
    xn = spec.x(spec.n)
    other = spec.one() - xn
    u1, u2 = cl.is_unit_in_A(xn), cl.is_unit_in_A(other)
    # in a local ring the non-units are closed under addition
    not_local = not u1.is_true and not u2.is_true
    reason = {"non_units": [xn.to_text(), other.to_text()], "sum": (xn + other).to_text(),
              "argument": "two non-units summing to 1"}
    N = fr.nilpotents(R)
    pw = fr.prime_witness(R, N)
    prime = R.one not in N and pw is None
    witness = None if pw is None else {"a": R.format_element(pw[0]), "b": R.format_element(pw[1])}
    checklist["N_R_prime"] = prime
    if prime:
        mj = mn = REFUTED
        harmonic = "A/J(A) is strongly harmonic if and only if A has a unique maximal ideal"
    else:
        mj = mn = UNDETERMINED
        harmonic = UNDETERMINED
    return ExtensionVerdicts(not_local, reason, prime, witness, mj, mn, harmonic, checklist)


def spectra_report(spec):
    """Everything ``spectra`` knows about an extension, as a JSON-ready dict."""
    return {"ring": spec.base.name,
            "spectrum": gelfand_check(spec.base).as_dict(),
            "mod_radical_criterion": mod_radical_gelfand_criterion(spec).to_json(),
            "extension": extension_verdicts(spec).as_dict()}


def render_text(report):
    """Human-readable rendering listing each theorem applied and its hypotheses."""
    sp, ext = report["spectrum"], report["extension"]
    lines = [f"ring: {report['ring']}",
             f"maximal right ideals: {len(sp['maximal_right_ideals'])}"]
    for k, I in enumerate(sp["maximal_right_ideals"]):
        lines.append(f"  M{k} = {{{', '.join(I)}}}")
    lines.append(f"maximal two-sided ideals: {len(sp['maximal_two_sided_ideals'])}")
    lines.append(f"R gelfand: {sp['gelfand']}   R strongly harmonic: {sp['strongly_harmonic']}")
    for w in sp["separation_witnesses"]:
        lines.append(f"  separates M{w['pair'][0]}, M{w['pair'][1]}: r={w['r']}, s={w['s']}")
    crit = report["mod_radical_criterion"]
    lines.append(f"base criterion rRs in N(R): {crit['value']}")
    checks = ", ".join(f"{k}={'yes' if v else 'no'}" for k, v in ext["hypotheses"].items())
    lines.append(f"hypotheses: {checks}")
    if "missing_hypotheses" in ext:
        lines.append(f"theorems not applied; missing: {', '.join(ext['missing_hypotheses'])}")
        return "\n".join(lines)
    r = ext["not_local_reason"]
    lines.append(f"A not local: {ext['not_local']} ({' and '.join(r['non_units'])} are non-units "
                 f"with sum {r['sum']})")
    if ext["N_R_prime"]:
        lines.append("N(R) prime: yes")
        lines.append("A/J(A) not Gelfand (N(R) prime, weak compatible, NI)")
        lines.append("A/N*(A) not Gelfand (N(R) prime, weak compatible, NI)")
    else:
        w = ext["N_R_witness"]
        lines.append(f"N(R) prime: no (a={w['a']}, b={w['b']} with aRb in N(R))" if w
                     else "N(R) prime: no")
        lines.append("A/J(A) Gelfand: undetermined")
        lines.append("A/N*(A) Gelfand: undetermined")
    lines.append(f"harmonic iff unique maximal ideal: {ext['harmonic_iff_unique_max']}")
    return "\n".join(lines)
