"""Invariant suites behind the verify command."""

from .verifier import AlgebraVerifier, merge_reports, verify_spec, verify_sweep

__all__ = ["AlgebraVerifier", "merge_reports", "verify_spec", "verify_sweep"]
