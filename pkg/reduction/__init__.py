"""Normal-form reductions and DNF machinery."""
