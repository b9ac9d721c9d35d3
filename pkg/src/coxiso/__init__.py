"""Isomorphism of chordal Coxeter groups through diagram twists and blow-ups."""
from .angle import (BadSeparator, CrossEyedMove, GrossSeparator, StarDecomposition,
                    bad_separators, candidate_bad_edges, cross_eyed_twist, gross_separators,
                    star_decomposition)
from .canon import canonical_form, canonical_labeling, diagram_from_form, isomorphism
from .chordal import (ChordalityWitness, chordality, close_separator, is_chordal,
                      is_minimal_separator, minimal_separators_between)
from .decide import (Certificate, Verdict, decide_isomorphic, enumerate_iso_classes,
                     replay_certificate)
from .diagram import (INFINITY, PDiagram, SimplexStatus, components, export, is_simplex,
                      parse_diagram, perp, simplex_status)
from .errors import (AdjacentPair, CoxisoError, InvalidMove, InvalidPlan, InvariantViolation,
                     MalformedInput, NoBadSeparators, NotABadEdge, NotABase, NotChordal,
                     NotIrreducible, NotSpherical, OrbitTruncated, SamePair, UnknownGenerator)
from .expansion import BlowupPlan, Ineligible, blow_up, blowup_eligibility, expand
from .georep import ReflectionRep, WordOrderReport, build_rep, longest_word, verify_blowup, word_order
from .orbit import Orbit, twist_orbit
from .spherical import (Base, FiniteType, bases, classify_irreducible, irreducible_spherical_sets,
                        is_spherical, longest_conjugation)
from .twist import Separation, TwistMove, apply_twist, enumerate_twist_moves

__version__ = "0.1.0"

__all__ = [
    "BadSeparator", "CrossEyedMove", "GrossSeparator", "StarDecomposition", "bad_separators",
    "candidate_bad_edges", "cross_eyed_twist", "gross_separators", "star_decomposition",
    "canonical_form", "canonical_labeling", "diagram_from_form", "isomorphism",
    "ChordalityWitness", "chordality", "close_separator", "is_chordal", "is_minimal_separator",
    "minimal_separators_between",
    "Certificate", "Verdict", "decide_isomorphic", "enumerate_iso_classes", "replay_certificate",
    "INFINITY", "PDiagram", "SimplexStatus", "components", "export", "is_simplex",
    "parse_diagram", "perp", "simplex_status",
    "AdjacentPair", "CoxisoError", "InvalidMove", "InvalidPlan", "InvariantViolation",
    "MalformedInput", "NoBadSeparators", "NotABadEdge", "NotABase", "NotChordal",
    "NotIrreducible", "NotSpherical", "OrbitTruncated", "SamePair", "UnknownGenerator",
    "BlowupPlan", "Ineligible", "blow_up", "blowup_eligibility", "expand",
    "ReflectionRep", "WordOrderReport", "build_rep", "longest_word", "verify_blowup",
    "word_order", "Orbit", "twist_orbit",
    "Base", "FiniteType", "bases", "classify_irreducible", "irreducible_spherical_sets",
    "is_spherical", "longest_conjugation",
    "Separation", "TwistMove", "apply_twist", "enumerate_twist_moves",
]
