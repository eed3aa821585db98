"""The generalized Fermat curve model."""
