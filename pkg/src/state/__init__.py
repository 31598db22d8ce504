from .manager import ResultCache

__all__ = ["ResultCache"]
