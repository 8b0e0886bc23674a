"""Exact verification of Casoratian identities for the Wilson and Askey-Wilson families."""

from .exact import GaussianRational, QBase
from .families import FAMILY_NAMES, ParamPoint, family, sample_params

__version__ = "0.1.0"

__all__ = ["GaussianRational", "QBase", "FAMILY_NAMES", "ParamPoint", "family", "sample_params", "__version__"]
