"""
Solver Package
Finite-domain CSP engine, homomorphism search and certificate replay
"""
from .csp import (
    BacktrackingSolver,
    Certificate,
    CertificateKind,
    Constraint,
    CspInstance,
    solve,
)
from .checker import (
    brute_force_solve,
    check_assignment,
    check_coloring,
    check_homomorphism,
    verify_certificate,
)
from .homomorphism import (
    find_hom,
    find_hom_certificate,
    hom_instance,
    is_3colorable,
    three_color,
    three_color_certificate,
)

__all__ = [
    "BacktrackingSolver",
    "Certificate",
    "CertificateKind",
    "Constraint",
    "CspInstance",
    "solve",
    "brute_force_solve",
    "check_assignment",
    "check_coloring",
    "check_homomorphism",
    "verify_certificate",
    "find_hom",
    "find_hom_certificate",
    "hom_instance",
    "is_3colorable",
    "three_color",
    "three_color_certificate",
]
