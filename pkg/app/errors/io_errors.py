"""
Contains custom errors related to Input/Output operations.
It includes errors for missing input tables and configuration files.
"""

from app.errors import CustomError


class InputNotFoundError(FileNotFoundError, CustomError):
    """Custom error for missing input data files."""
    code = "IO_ERROR"

    def __init__(self, input_path):
        self.input_path = input_path
        # OSError.__init__ does not chain to CustomError
        self.message = f"Input not found: {self.input_path}"
        super().__init__(self.message)


class ConfigNotFoundError(FileNotFoundError, CustomError):
    """Custom error for missing configuration or template files."""
    code = "IO_ERROR"

    def __init__(self, config_path):
        self.config_path = config_path
        self.message = f"Configuration not found: {self.config_path}"
        super().__init__(self.message)
