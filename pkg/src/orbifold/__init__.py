"""Cone-point configurations, their symmetries and the orbit-type equation."""
