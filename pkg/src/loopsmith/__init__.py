"""Finite loop tables: structure analysis and half-morphism search."""

from .errors import (
    HalfMapError,
    InternalCheckError,
    LoopError,
    LoopFileError,
    QuotientError,
    TableValidationError,
    TheoremViolation,
)
from .table import ElementOrder, LoopTable, MoufangFlags, ValidationReport, relabel, validate
from .subloops import (
    Subloop,
    associator_subloop,
    center,
    commutant,
    commutative_nilpotency_class,
    commutator_subloop,
    generate_subloop,
    hall_3prime_subgroup,
    is_direct_product,
    is_normal,
    nucleus,
    nucleus_left,
    nucleus_middle,
    nucleus_right,
    quotient,
    restriction,
    sylow_subloop,
)
from .innermaps import (
    PermGroupHandle,
    compose,
    cycles_str,
    group_closure,
    identity_perm,
    inner_l,
    inner_r,
    inner_t,
    inverse_perm,
    is_automorphic,
    is_automorphism,
    is_left_automorphic,
    inner_map_witness,
    left_translation,
    moufang_l_iff_r_check,
    perm_from_cycles,
    right_translation,
)
from .halfmorph import (
    GGTriple,
    HalfClass,
    HalfEnumeration,
    HalfKind,
    HalfMap,
    TheoremReport,
    classify,
    compose_with_inversion,
    d_set,
    enumerate_half_automorphisms,
    find_gg_triples,
    half_maps_form_group_check,
    induced_on_quotient,
    inverse_half_map,
    is_semi_isomorphism,
    make_half_map,
    semi_isomorphism_variant_holds,
    verify_main_theorem,
)
from .catalog import (
    CatalogEntry,
    builtin,
    catalog_keys,
    check_expected,
    entries,
    entry_to_json,
    make_chein,
    make_cyclic,
    make_dihedral,
    make_quaternion8,
    make_symmetric3,
    parse_loop_file,
    write_loop_file,
)

__version__ = "0.1.0"
