class ValidationError(Exception):
    """The command line does not match the declared arguments."""
    pass
