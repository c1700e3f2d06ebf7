"""Exact combinatorics of Hom-configurations for ADE quivers.

Core subpackages:

* ``cartan``      - quivers, root systems, Weyl matrices, Coxeter data
* ``reps``        - indecomposable representations, exact Hom/Ext
* ``orbit``       - the orbit category fundamental domain and Hom table
* ``configs``     - Hom-free sets, configurations and their bijection to
                    sincere Hom-free module sets
* ``noncrossing`` - the noncrossing-partition lattice and the reflection
                    side of the bijections
* ``typea``       - classical noncrossing partitions of [n] and the
                    linear-orientation dictionary
* ``mutation``    - mutation of configurations and the mutation graph
* ``service``     - FastAPI wrapper; the CLI in ``homconf.cli`` is a thin
                    client of the same handlers
"""

__version__ = "0.1.0"
