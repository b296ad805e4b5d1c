"""Exact combinatorics of modular GL_n representations.

Residue signatures and crystal operators on dominant weights and
partitions, the strictly-decreasing-tuple (wedge) and partition Fock
models with a defining-relation verifier, Weyl module characters by
tableau enumeration, and the polynomial/swap operator algebra on tensor
powers realized as exact matrices over a prime field.
"""

from .errors import InputError, VerificationError
from .weights import (
    addable_boxes,
    addable_rows,
    add_box,
    beta_to_weight,
    box_content,
    dominance_leq,
    dominant_weights,
    format_int_tuple,
    is_dominant,
    is_prime,
    normalize_partition,
    parse_int_tuple,
    partition_size,
    partitions_of,
    partitions_up_to,
    removable_boxes,
    removable_rows,
    remove_box,
    require_dominant,
    require_prime,
    shift_row,
    weight_to_beta,
)
from .characters import (
    FormalCharacter,
    alternant,
    casimir_scalar,
    dimension,
    rho,
    tensor_filtration_e,
    tensor_filtration_f,
    verify_pieri,
    verify_weyl_formula,
    weyl_character,
)
from .fock import (
    PARTITION,
    WEDGE,
    FockVector,
    apply_gen,
    check_kac_moody_relations,
    check_wedge_label,
    chevalley_e_line,
    chevalley_f_line,
    fock_apply,
    groth_e,
    groth_f,
    h_apply,
    wedge_apply,
    wedge_window_labels,
    weight_of,
)
from .crystal import (
    PARTITION_MODEL,
    WEIGHT_MODEL,
    CrystalGraph,
    alpha_signature,
    branching,
    crystal_e,
    crystal_f,
    crystal_graph,
    empty_component_classification,
    graph_to_dot,
    graph_to_json_obj,
    partition_crystal_e,
    partition_crystal_f,
    partition_signature,
    partition_string_lengths,
    reduce_signature,
    singular_vertices,
    string_lengths,
)
from .hecke import (
    TensorSpace,
    build_Ti,
    build_Xi,
    casimir,
    casimir_normal_ordered,
    generalized_eigenspaces,
    matrix_to_json_obj,
    matrix_unit_action,
    predicted_F_alpha_dims,
    rank_mod_p,
    swap_slots,
    syt_count,
    tensor_casimir,
    verify_casimir_coproduct,
    verify_flip_identity,
    verify_hecke_relations,
    x_on_module_tower,
)

__version__ = "0.1.0"
