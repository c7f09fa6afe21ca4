"""Formula syntax: AST, text format and fragment classification."""
