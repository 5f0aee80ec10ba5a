class DessinError(ValueError):
    """Raised for any domain-level failure: malformed input or a violated precondition.

    ``code`` is a short machine-readable tag surfaced by the CLI.
    """

    def __init__(self, message: str, code: str = "domain_error"):
        super().__init__(message)
        self.code = code
