"""Explicit rejection of inputs beyond desk scale.

Exhaustive searches (valuation sweeps, frame enumeration, world
enumeration) are guarded; exceeding a guard raises instead of silently
truncating.
"""


class SizeGuardError(ValueError):
    """Input exceeds a documented exhaustive-search limit."""
