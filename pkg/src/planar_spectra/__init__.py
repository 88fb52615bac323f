"""Certified spectral radii and extremal checks for planar graphs."""
