__all__ = ["library", "cli", "config", "constants", "errors", "events", "types"]
