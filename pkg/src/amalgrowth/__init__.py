"""Exact workbench for exponential growth rates of free and amalgamated
products of finite groups: normal-form arithmetic, Cayley-ball enumeration,
exact recurrence and root machinery, tree actions with replayable ping-pong
certificates, and a catalog of ready-made specifications."""

__version__ = "0.1.0"

from .amalgam import (
    AmalgamSpec,
    NormalForm,
    Word,
    cyclic_reduce,
    identity_nf,
    invert,
    is_identity,
    make_amalgam,
    multiply,
    nf_from_json,
    nf_to_json,
    reduce_word,
)
from .catalog import catalog_load, catalog_names, parse_word
from .groups import FiniteGroup, build_group, cyclic, dihedral, direct_product
from .growth import (
    GenSet,
    GrowthTable,
    enumerate_balls,
    make_genset,
    rate_estimates,
    shortest_word,
    word_length,
)
from .pingpong import (
    PingPongCertificate,
    certify_free_monoid,
    certify_free_split,
    replay,
)
from .spectral import (
    Recurrence,
    RootEnclosure,
    WeightedAlphabet,
    count_avoiding,
    dominant_root,
    fit_recurrence,
    largest_positive_root,
    lpv_bound,
    positive_root_from_lengths,
    unique_positive_root,
)
from .tree import TreeVertex, axis_segment, classify, distance, fixed_set

__all__ = [
    "AmalgamSpec",
    "FiniteGroup",
    "GenSet",
    "GrowthTable",
    "NormalForm",
    "PingPongCertificate",
    "Recurrence",
    "RootEnclosure",
    "TreeVertex",
    "WeightedAlphabet",
    "Word",
    "__version__",
    "axis_segment",
    "build_group",
    "catalog_load",
    "catalog_names",
    "certify_free_monoid",
    "certify_free_split",
    "classify",
    "count_avoiding",
    "cyclic",
    "cyclic_reduce",
    "dihedral",
    "direct_product",
    "distance",
    "dominant_root",
    "enumerate_balls",
    "fit_recurrence",
    "fixed_set",
    "identity_nf",
    "invert",
    "is_identity",
    "largest_positive_root",
    "lpv_bound",
    "make_amalgam",
    "make_genset",
    "multiply",
    "nf_from_json",
    "nf_to_json",
    "parse_word",
    "positive_root_from_lengths",
    "rate_estimates",
    "reduce_word",
    "replay",
    "shortest_word",
    "unique_positive_root",
    "word_length",
]
