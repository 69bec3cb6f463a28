"""Sparse algebra modules."""
