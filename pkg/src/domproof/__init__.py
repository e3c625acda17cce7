"""Checkers and translators for ER, cutting planes, ER-PLS and dominance proofs."""

__version__ = "0.1.0"
