"""Curve automorphisms and the lifting of cone-point symmetries."""
