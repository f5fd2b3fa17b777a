"""Hand-built skeletons shared by the test modules."""

