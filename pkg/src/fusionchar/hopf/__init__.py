"""Hopf algebras by structure constants and their character theory."""
from .algebra import HModule, HopfAlgebra, load_hopf, module_check, pivotal_check, validate_hopf
from .theory import (Cointegrals, character_span, Integrals, NormalizedIntegrals, center, check_character_laws,
                     class_functions, cointegrals, convolution, fourier, fourier_inv,
                     fourier_roundtrip, grouplikes, integrals, internal_character, is_grouplike,
                     maschke_indicator, normalized_integrals, pivotal_elements, radford_check,
                     radford_trace, random_class_function, regular_module, tensor_module,
                     trivial_module)

__all__ = [
    "HModule", "HopfAlgebra", "load_hopf", "validate_hopf", "module_check", "pivotal_check",
    "Integrals", "Cointegrals", "NormalizedIntegrals", "class_functions", "center", "convolution",
    "integrals", "cointegrals", "grouplikes", "is_grouplike", "pivotal_elements",
    "internal_character", "tensor_module", "trivial_module", "regular_module",
    "check_character_laws", "character_span", "normalized_integrals", "fourier", "fourier_inv", "fourier_roundtrip",
    "radford_trace", "radford_check", "maschke_indicator", "random_class_function",
]
