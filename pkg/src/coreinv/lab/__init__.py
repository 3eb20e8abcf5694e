"""Theorem checkers, premise generators and the finite-ring oracle."""
