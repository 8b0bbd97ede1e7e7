"""Developer tools for latticeineq."""
