class CustomWarning(UserWarning):
    """Base class for all custom warnings. Extra keyword context is kept on ``details``."""
    def __init__(self, message=None, **details):
        self.message = message or "A warning occurred"
        self.details = details
        super().__init__(self.message)
