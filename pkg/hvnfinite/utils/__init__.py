"""Contains utilities shared by the CLI, the verification suites and the pyATS jobs."""
