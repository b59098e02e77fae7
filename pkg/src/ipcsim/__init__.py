"""Stiff affine-deformable incremental potential contact on the CPU."""
__version__ = "0.1.0"
