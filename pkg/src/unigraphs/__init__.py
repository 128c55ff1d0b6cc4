"""Hereditary unigraphs: degree-sequence profiles, canonical decomposition,
spiders, class recognition and a brute-force oracle."""

__version__ = "0.1.0"

from ._core import backend_name, set_backend
from .catalog import CATALOG, named
from .classes import (
    ClassReport,
    classify,
    classify_sequence,
    hereditary_report,
    is_chair_free,
    is_class_G,
    is_forcibly_class_G,
    is_forcibly_class_G_sequence,
    is_hereditary_unigraph,
    is_kite_free,
    is_matrogenic,
    is_matroidal,
    is_pseudo_split,
    is_split,
    is_threshold,
    pseudo_split_partition,
    recognize,
)
from .decomposition import (
    CanonicalDecomposition,
    Component,
    SequenceDecomposition,
    SplittedGraph,
    complement_decomposition,
    compose,
    decompose,
    decompose_sequence,
    is_indecomposable,
)
from .errors import (
    CapExceeded,
    Graph6Error,
    InvalidVertex,
    NotAModule,
    NotGraphic,
    RouteDisagreement,
    SequenceError,
    UnigraphsError,
)
from .graph import (
    Graph,
    complement,
    contract_module,
    disjoint_union,
    induced,
    is_module,
    join,
    maximal_proper_modules,
    substitute,
)
from .iso import canonical_form, find_induced, is_isomorphic
from .oracle import (
    count_realizations,
    enumerate_graphs,
    is_forcibly_free,
    is_hereditary_unigraph_bruteforce,
    is_unigraph_bruteforce,
    realizations,
    verify,
)
from .sequence import (
    DegreeSequence,
    EGProfile,
    conjugate,
    delta,
    eg_profile,
    is_graphic,
    m_of,
    normalize,
    parse_sequence,
)
from .spiders import (
    SpiderCertificate,
    recognize_bottom_expanded,
    recognize_spider,
    recognize_top_expanded,
)
from .synthetic import synthetic_hereditary_sequence

__all__ = [name for name in dir() if not name.startswith("_")]
