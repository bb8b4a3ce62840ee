"""Exact cluster algebra of type A_n, with its root-system side."""

from .laurent import LaurentPolynomial, NotExactError
from .roots import (Root, almost_positive_roots, compatibility_degree, diagonal_of_root,
                    root_of_diagonal, tau)
from .seeds import (Seed, cluster_variable, denominator_vector, enumerate_seeds, exponent_vector,
                    initial_seed, mutate_seed, random_walk)

__all__ = [
    "LaurentPolynomial", "NotExactError",
    "Root", "almost_positive_roots", "compatibility_degree", "diagonal_of_root",
    "root_of_diagonal", "tau",
    "Seed", "cluster_variable", "denominator_vector", "enumerate_seeds", "exponent_vector",
    "initial_seed", "mutate_seed", "random_walk",
]
