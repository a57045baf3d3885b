"""Finite rings, nil-clean decompositions and zero-divisor conditions."""
