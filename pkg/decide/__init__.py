"""Satisfiability, validity and the brute-force oracle."""
