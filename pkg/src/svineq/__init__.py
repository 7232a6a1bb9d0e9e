"""Singular value inequalities for sums of matrices.

Subpackages:
- matrix: dense real/complex matrix value type and its JSON format
- spectrum: singular values, Ky Fan and subset-sum functionals
- bounds: catalog of refuted and proven lower bounds, chain verifier
- trace: trace extrema over semi-unitary matrices and their oracle
- search: randomized counterexample search
"""

__version__ = "0.1.0"
