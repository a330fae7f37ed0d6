"""Exact algebraic Morse reduction of based chain complexes.

Two independent engines reduce a complex onto the critical cells of a Morse
matching: path sums over the Morse graph (:mod:`amt.gamma`) and the basic
perturbation lemma applied to the trivial Morse contraction
(:mod:`amt.hpt`).  They must agree block for block.
"""

from .complex import BasedComplex, BlockMap, Cell, build_complex, check_d_squared
from .engines import run_engines
from .gamma import ReductionResult, reduce_direct
from .homology import compare_homology, homology, smith_normal_form
from .hpt import Contraction, perturb, reduce_hpt, trivial_morse_contraction
from .io import load_complex, parse_complex, write_complex
from .matchsearch import greedy_matching
from .matrix import Matrix
from .morsegraph import Matching, critical_cells, validate_matching
from .ring import GF, QQ, ZZ, RingSpec
from .simplicial import from_simplicial
from .verify import verify_contraction

__version__ = "0.1.0"
