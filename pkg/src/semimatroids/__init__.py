"""Semimatroids, assigning matroids, hyperplane arrangements and gain graphs."""
