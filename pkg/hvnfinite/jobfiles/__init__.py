"""Contains the pyATS aetest scripts, one per verification suite."""
