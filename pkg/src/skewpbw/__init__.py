"""Skew PBW extensions over small finite rings.

Exact arithmetic in ``A = sigma(R)<x_1, ..., x_n>``, coefficient-level
classification of element types, brute-force oracles that check those
classifications, and Gelfand / strongly harmonic analysis.
"""

from .classifiers import (Verdict, hypothesis_profile, idempotent_shape, is_clean_in_A,
                          is_idempotent_in_A, is_nilpotent_in_A, is_pi_regular_in_A,
                          is_unit_in_A, is_vnl_in_A, is_vnr_in_A, nj_check, product_in_nil)
from .errors import *  # noqa: F401,F403
from .finite_rings import (FiniteRing, IdealDescriptor, RingElement, build_ring, product, s2,
                           table_ring, ut2, zmod)
from .fixtures import build_extension, fixture
from .oracles import (SearchBounds, oracle_clean, oracle_idempotent, oracle_nilpotent,
                      oracle_pi_regular, oracle_unit, oracle_vnl, oracle_vnr, theorem_crosscheck)
from .pbw import ExtensionSpec, SkewPoly, extension, multiply, power, validate_extension
from .sigma_delta import EndoMap, SigmaDerivation, compatibility_report, validate_system
from .spectra import extension_verdicts, gelfand_check, mod_radical_gelfand_criterion

__version__ = "0.1.0"
