"""Finite branching-time models, timelines and rule contexts."""
