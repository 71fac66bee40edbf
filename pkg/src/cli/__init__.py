"""Command-line session handling and polynomial parsing."""
