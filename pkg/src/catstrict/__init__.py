"""Finite category theory toolkit: operads, pseudoalgebras and strictification."""
