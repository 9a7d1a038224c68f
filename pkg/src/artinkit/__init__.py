"""Membership problems in Artin groups: word problems, Benois saturation,
the automaton-to-submonoid compiler and the forbidden-subgraph classifier."""

from __future__ import annotations

from .automata import Nfa, NormalizedNfa, benois_member, contains_identity, normalize, saturate
from .braid import (
    BraidWord,
    GarsideNormalForm,
    braid_equal,
    braid_is_trivial,
    droms_embed,
    gamma0,
    garside_normal_form,
    is_pure,
    permutation_of,
)
from .classifier import ForbiddenWitness, Problem, Status, Verdict, braid_graph, classify, find_forbidden
from .graph import P4, LabeledGraph, path_graph
from .kernels import BACKEND
from .raag import commutes, p4_conjugate_vertex, raag_canonical_form, raag_is_trivial
from .reduction import (
    Found,
    NotFoundWithin,
    ReductionInstance,
    bounded_member,
    build_delta,
    compile_to_b4,
    extract_witness,
    instantiate_in_p4,
    make_intersection_instance,
)
from .words import Alphabet, free_inverse, free_reduce

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_") and name != "annotations"]
