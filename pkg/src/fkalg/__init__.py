"""Graded components of graph subalgebras via noncrossing-tree rewriting."""

from .fk_words import Monomial, Permutation
from .graph_core import EdgeOrder, Graph, GraphError, Polynomial, SetPartition
from .noncrossing import NoncrossingTree, enumerate_G_reduced, enumerate_noncrossing_trees, signature
from .orlik_terao import OTElement, abelianize, hilbert_series, nbc_basis
from .reduction import TreeElement, expand_Kn, leading_term, reduce

__version__ = "0.1.0"
