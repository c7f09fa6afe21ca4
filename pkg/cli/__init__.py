"""Command-line front-end, corpus and demo reports."""
