"""Extension descriptions (JSON form) and the standard fixture extensions.

An extension description looks like::

    {"ring": {"family": "ut2", "base": {"family": "zmod", "n": 2}},
     "sigmas": [{"name": "ut2_diag"}],
     "deltas": [{"name": "ut2_strict_upper_delta"}],
     "d": {"1,2": 1},
     "rel": {"1,2": {"r0": 0, "r": [0, 0]}}}

``d`` and ``rel`` are optional; coefficients are ring literals.  ``deltas``
defaults to zero maps.
"""

from .errors import InvalidSpec
from .finite_rings import build_ring
from .pbw import DEFAULT_MAX_DEGREE, ExtensionSpec, validate_extension
from .sigma_delta import EndoMap, SigmaDerivation, named_map, validate_system


def _pair(key, n):
    try:
        i, j = (int(s) for s in str(key).split(","))
    except ValueError:
        raise InvalidSpec(f"relation key {key!r} must look like 'i,j'") from None
    return i, j


def build_extension(desc, *, validate=True, samples=500, seed=0):
    if not isinstance(desc, dict) or "ring" not in desc or "sigmas" not in desc:
        raise InvalidSpec("extension description needs 'ring' and 'sigmas'")
    R = build_ring(desc["ring"])
    sig_specs = desc["sigmas"]
    if not isinstance(sig_specs, list) or not sig_specs:
        raise InvalidSpec("'sigmas' must be a non-empty list")
    n = len(sig_specs)
    delta_specs = desc.get("deltas", [{"name": "zero"}] * n)
    if len(delta_specs) != n:
        raise InvalidSpec(f"{n} sigmas but {len(delta_specs)} deltas")
    sigmas = [EndoMap(R, named_map(R, s), name=s.get("name")) for s in sig_specs]
    deltas = [SigmaDerivation(R, s, named_map(R, d), name=d.get("name"))
              for s, d in zip(sigmas, delta_specs)]
    system = validate_system(R, sigmas, deltas)
    d = {_pair(k, n): R.from_literal(v) for k, v in desc.get("d", {}).items()}
    rel = {}
    for k, v in desc.get("rel", {}).items():
        if not isinstance(v, dict):
            raise InvalidSpec(f"relation {k!r} must be an object with r0 and r")
        rs = v.get("r", [0] * n)
        rel[_pair(k, n)] = (R.from_literal(v.get("r0", 0)), tuple(R.from_literal(x) for x in rs))
    spec = ExtensionSpec(system, d, rel, max_degree=desc.get("max_degree", DEFAULT_MAX_DEGREE))
    spec.description = desc
    if validate:
        validate_extension(spec, samples=samples, seed=seed)
    return spec


def zmod(n):
    return {"family": "zmod", "n": n}


DESCRIPTIONS = {
    "zmod4": {"ring": zmod(4), "sigmas": [{"name": "identity"}], "deltas": [{"name": "zero"}]},
    "zmod4_2vars": {"ring": zmod(4), "sigmas": [{"name": "identity"}] * 2,
                    "deltas": [{"name": "zero"}] * 2},
    "zmod3": {"ring": zmod(3), "sigmas": [{"name": "identity"}], "deltas": [{"name": "zero"}]},
    "zmod6": {"ring": zmod(6), "sigmas": [{"name": "identity"}], "deltas": [{"name": "zero"}]},
    "ut2": {"ring": {"family": "ut2", "base": zmod(2)}, "sigmas": [{"name": "ut2_diag"}],
            "deltas": [{"name": "ut2_strict_upper_delta"}]},
    "s2": {"ring": {"family": "s2", "base": zmod(4)}, "sigmas": [{"name": "s2_negate_b"}],
           "deltas": [{"name": "zero"}]},
    "s2_three": {"ring": {"family": "s2", "base": zmod(4)},
                 "sigmas": [{"name": "identity"}, {"name": "s2_negate_b"}, {"name": "s2_zero_b"}],
                 "deltas": [{"name": "zero"}] * 3},
}

_cache = {}


def fixture(name):
    """A validated fixture extension, built once per process."""
    if name not in DESCRIPTIONS:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(DESCRIPTIONS)}")
    if name not in _cache:
        _cache[name] = build_extension(DESCRIPTIONS[name])
    return _cache[name]
