"""Exact BN / Markov blanket structure counting with brute-force oracles"""
__version__ = "0.1.0"
