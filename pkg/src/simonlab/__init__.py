"""Hidden-subgroup simulation lab: exact solvers over Z2^n, the classical
query-bound experiment, and the finite-Abelian generalization."""

__version__ = "0.1.0"
