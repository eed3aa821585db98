"""Field-of-moduli classification, the Weil cocycle check and theorem verifiers."""
