"""Riemann sphere points, extended Möbius maps and the complex literal grammar."""
