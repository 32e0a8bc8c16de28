"""
CLI Package
Command-line frontend and certificate envelopes
"""
from .app import app, run
from .envelope import CertificateEnvelope, InputDigest, file_digest
from .procedures import BaseProcedure, Outcome, ProcedureRegistry, default_registry

__all__ = [
    "app",
    "run",
    "CertificateEnvelope",
    "InputDigest",
    "file_digest",
    "BaseProcedure",
    "Outcome",
    "ProcedureRegistry",
    "default_registry",
]
