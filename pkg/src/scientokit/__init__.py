"""scientokit: scientometric indicators, citation indices and bibliometric
law fitting over field-tagged bibliographic corpora."""

__version__ = "0.1.0"

from .series import ProductivityDistribution, RankedList, YearSeries  # noqa: F401
from .records import BibRecord, ParseReport, parse_export  # noqa: F401
from .corpus import Corpus, build_corpus  # noqa: F401
