"""Core package: model, orbit analyses, exact LP, monoid search and the classifier."""
