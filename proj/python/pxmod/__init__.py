"""Pre-crossed and crossed modules over a fixed base.

Thin python surface over the C++ core: loading and serializing instance
files, the Peiffer commutator and product, the reflection onto crossed
modules, the coproduct, instance generation, and the theorem-check suites.
"""

try:
    from ._pxmod import (  # noqa: F401
        ConsistencyError,
        ParseError,
        Pcm,
        ValidationError,
        check_theorems,
        commutator,
        coproduct,
        generate,
        load,
        loads,
        product,
        reflect,
    )
except ImportError:  # running against a plain CMake build tree
    from _pxmod import (  # noqa: F401
        ConsistencyError,
        ParseError,
        Pcm,
        ValidationError,
        check_theorems,
        commutator,
        coproduct,
        generate,
        load,
        loads,
        product,
        reflect,
    )

__all__ = [
    "ConsistencyError",
    "ParseError",
    "Pcm",
    "ValidationError",
    "check_theorems",
    "commutator",
    "coproduct",
    "generate",
    "load",
    "loads",
    "product",
    "reflect",
]
