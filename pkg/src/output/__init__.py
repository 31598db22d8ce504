from .generator import ReportWriter

__all__ = ["ReportWriter"]
