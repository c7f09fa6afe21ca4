"""Truth evaluation and context update."""
