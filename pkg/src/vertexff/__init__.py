"""Free-fermion Fock space, vertex-operator form factors and XXZ dressed quantities."""

__version__ = "0.1.0"
