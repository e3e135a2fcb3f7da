"""Multi-HNTF: hierarchical nonnegative tensor factorization with one mixing matrix per layer"""

__version__ = "0.1.0"
