"""Exact verification of the quantum Lorentz transformation operator identities
and evanescent-mode superluminality numerics."""

__version__ = "0.1.0"
