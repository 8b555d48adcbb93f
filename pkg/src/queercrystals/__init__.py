"""Crystals of factorized involution words.

Insertion algorithms with recording tableaux, gl_n- and q_n-crystal
operators on words, factorizations, and shifted tableaux, Little bumping
operators, dual equivalence, Schur-P characters, and a desk-scale
verification suite for the theorems tying all of these together.
"""

from .permwords import (
    FpfInvolution,
    Permutation,
    atoms,
    ck,
    ck0_o,
    ck0_sp,
    descent_set,
    ell_o,
    ell_sp,
    enumerate_words,
    equivalence_class,
    fpf_grassmannian_shape,
    inv_grassmannian_shape,
    is_fpf_involution_word,
    is_involution_word,
    is_reduced_word,
    length_invariants,
    shift_t,
    star,
    word_to_permutation,
)
from .tableaux import (
    ShiftedTableau,
    Tableau,
    dual_equiv,
    is_increasing,
    is_semistandard,
    is_standard,
    row_word,
    shword,
    star_op,
    tableau_descents,
    weight,
)
from .insertion import (
    Factorization,
    InsertionResult,
    eg_insert,
    hm_insert,
    insert,
    invert_insertion,
    oeg_insert,
    speg_insert,
)
from .crystals import (
    Crystal,
    QBAR,
    axioms_report,
    crystals_isomorphic,
    dbl_map,
    explore,
    factorization_crystal,
    inv_map,
    is_quasi_isomorphism,
    morphism_report,
    pair,
    shifted_tableau_crystal,
    shifted_tableau_crystal_all,
    word_crystal,
)
from .bumping import (
    MarkedWord,
    bump,
    bump_chain,
    bump_factorization,
    companion_index,
    decompose_bump,
    delete_letter,
    push_step,
)
from .symchar import (
    Polynomial,
    character,
    expand,
    is_supersymmetric,
    is_symmetric,
    schur_poly,
    schurp_poly,
    stanley_poly,
)

__version__ = "0.1.0"
