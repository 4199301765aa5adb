"""Exact computations with finite-dimensional Lie-Rinehart algebras.

Submodules: ``exactlin`` (rational linear algebra), ``algebra`` (core
structures and validators), ``constructions`` (builtins and standard
constructions), ``uce`` (universal central extensions), ``homology``
(Rinehart (co)homology), ``lifting`` (coverings, automorphisms and
derivations), ``nabtensor`` (actions, crossed modules, tensor products),
``fileformat`` and ``cli``.
"""

from .algebra import (
    AxiomError, CommAlgebra, LeftLRModule, LieRinehartAlgebra, LRMorphism, RightLRModule, Violation,
    center, commutator, is_perfect, validate_lr, validate_morphism,
)
from .constructions import BUILTIN_NAMES, builtin, transformation_algebra
from .homology import cohomology, homology
from .nabtensor import hat_tensor, tensor_product
from .uce import build_uce, universal_lift

__version__ = "0.1.0"

__all__ = [
    "AxiomError", "CommAlgebra", "LeftLRModule", "LieRinehartAlgebra", "LRMorphism", "RightLRModule",
    "Violation", "center", "commutator", "is_perfect", "validate_lr", "validate_morphism",
    "BUILTIN_NAMES", "builtin", "transformation_algebra", "cohomology", "homology", "hat_tensor",
    "tensor_product", "build_uce", "universal_lift",
]
