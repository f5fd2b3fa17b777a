"""
core package

Exact arithmetic, root systems, skeletons and the invariants computed from them.
"""
