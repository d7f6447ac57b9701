"""
Maximal ideals and Gelfand verdicts
===================================

The base ring is analysed exhaustively; the extension only receives
verdicts its hypotheses support.
"""

from skewpbw import spectra
from skewpbw.fixtures import fixture

for name in ["zmod6", "ut2", "s2"]:
    print(spectra.render_text(spectra.spectra_report(fixture(name))))
    print()
