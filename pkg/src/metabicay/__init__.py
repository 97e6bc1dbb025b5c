"""Bi-Cayley graphs over split metacyclic p-groups."""
