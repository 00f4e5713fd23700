"""Finite ternary groups: Cayley cubes, constructions and bi-element representations."""
