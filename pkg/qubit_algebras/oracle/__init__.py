"""Dense finite-truncation ground truth."""
