"""Facial edge colorings of plane graphs."""
