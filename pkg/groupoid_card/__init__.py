"""Exact groupoid cardinalities, stuff-type series and homomorphism-counting tests"""

__version__ = "1.0.0"
