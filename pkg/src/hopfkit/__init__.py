"""Exact verification of quasi-Hopf, weak Hopf and braided Hopf structures,
with constructive structure theorems for bicomodule algebras."""

from .core import QQ, GF, Field, LinearMap, Report, Tensor, CertificationError

__version__ = "0.1.0"

__all__ = ["QQ", "GF", "Field", "LinearMap", "Report", "Tensor", "CertificationError"]
