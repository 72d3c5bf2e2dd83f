"""Exact nef-class certification on self-products of smooth curves."""

from .catalog import (
    Generality,
    GenusContext,
    boundary_samples,
    dump,
    generators,
    obstructions,
)
from .certifier import NEF, NOT_NEF, UNKNOWN, Certificate, Verdict, Witness, certify, replay
from .config import DEFAULT_CONFIG, NeflabConfig, load_config
from .neronseveri import (
    DELTA,
    F1,
    F2,
    CnClass,
    MixedClass,
    SurfaceClass,
    lift_to_Cn,
    pair,
    self_intersection,
)

__version__ = "0.1.0"

__all__ = [
    "Generality",
    "GenusContext",
    "boundary_samples",
    "dump",
    "generators",
    "obstructions",
    "NEF",
    "NOT_NEF",
    "UNKNOWN",
    "Certificate",
    "Verdict",
    "Witness",
    "certify",
    "replay",
    "DEFAULT_CONFIG",
    "NeflabConfig",
    "load_config",
    "DELTA",
    "F1",
    "F2",
    "CnClass",
    "MixedClass",
    "SurfaceClass",
    "lift_to_Cn",
    "pair",
    "self_intersection",
    "__version__",
]
