"""Complex symmetric conference matrices, Seidel matrices and equi-isoclinic planes."""

from ._eqiso import (
    ConferenceMatrix,
    EigenStructure,
    FieldCtx,
    HadamardMatrix,
    LsBound,
    PlaneTuple,
    SeidelMatrix,
    UnitComplex,
    build_conference,
    build_gram,
    build_seidel,
    check_admissible,
    check_ls_bound,
    conference_residual,
    critical_omega,
    double_conference,
    eigen_structure,
    enumerate_orders,
    extract_bases,
    gram_counts,
    isoclinic_parameter,
    legendre_chi,
    make_field,
    make_record,
    parse_record_text,
    record_to_text,
    verify_conference_exact,
    verify_hadamard,
    verify_isoclinic,
    verify_record_text,
    verify_seidel_square,
)

__all__ = [name for name in dir() if not name.startswith("_")]
