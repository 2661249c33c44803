"""bicatkit: finite two-dimensional category theory you can run.

Constructors and exhaustive validators for finite bicategories and the maps
between them (lax functors, icons, oplax transformations), the two-sided
cylinder construction, nerve truncations, and a batch CLI over a small
structure-file format.
"""

__version__ = "0.1.0"
