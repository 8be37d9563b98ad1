"""Exhaustive and sampled verification of the order-theoretic claims."""
