"""Exact tools for even symmetric forms: construction, psd decisions, not-sos
certificates and degree jumping."""

from .polyring import Form, FormError, PatternPoint, PointFamily, power_sum
from .glossary import FormId, build, verify_identities
from .positivity import (MSexticCoeffs, PsdVerdict, decide_psd, m_sextic_status,
                         quartic_symmetric_psd, search_counterexample)
from .refuter import (Inconclusive, RefutationCertificate, RefutationScript, builtin_script,
                      refute, verify_certificate)
from .jumper import chart, classify, jump_allvars, jump_pq, seed

__all__ = [
    "Form", "FormError", "PatternPoint", "PointFamily", "power_sum",
    "FormId", "build", "verify_identities",
    "MSexticCoeffs", "PsdVerdict", "decide_psd", "m_sextic_status",
    "quartic_symmetric_psd", "search_counterexample",
    "Inconclusive", "RefutationCertificate", "RefutationScript", "builtin_script",
    "refute", "verify_certificate",
    "chart", "classify", "jump_allvars", "jump_pq", "seed",
]
