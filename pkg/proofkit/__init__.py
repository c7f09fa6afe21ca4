"""Hilbert-style proof checking."""
