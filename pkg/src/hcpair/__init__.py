"""Exact computer algebra for Harish-Chandra pairs."""
