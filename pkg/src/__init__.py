"""cuntzlab: exact computer algebra for abstract Cuntz semigroups"""

__version__ = "0.1.0"
