"""Identity catalog and its runners."""

from .catalog import (
    CATALOG,
    IDENTITY_IDS,
    Fault,
    IdentityReport,
    Mismatch,
    verify_all,
    verify_identity,
)

__all__ = [
    "CATALOG",
    "IDENTITY_IDS",
    "Fault",
    "IdentityReport",
    "Mismatch",
    "verify_all",
    "verify_identity",
]
