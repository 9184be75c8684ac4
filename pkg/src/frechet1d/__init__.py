"""Exact 1D continuous Frechet distance, static and under translation or scaling."""
