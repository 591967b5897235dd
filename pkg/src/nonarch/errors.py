"""Error types shared by the JSON readers and the CLI."""


class SchemaError(ValueError):
    """Malformed input; ``path`` points at the offending JSON location."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
