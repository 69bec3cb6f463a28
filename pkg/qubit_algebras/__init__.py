"""Input and output algebras of an infinite qubit system."""
__version__ = "0.1.0"
