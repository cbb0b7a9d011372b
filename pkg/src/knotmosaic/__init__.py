"""Knot mosaics, mosaic moves and quantum knot systems."""
