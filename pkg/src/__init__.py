

"""Top-level src package so IDEs/type-checkers can resolve imports like `src.cyclosynth`."""
