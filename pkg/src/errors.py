"""
Exception hierarchy. Every error carries the CLI exit code it maps to.
"""
from typing import Any, Dict, Optional


class PricingError(Exception):
    """Base class for simulator errors"""
    exit_code = 1


class ConfigError(PricingError):
    """Invalid or unreadable experiment configuration"""
    exit_code = 1

    def __init__(self, message: str, field: Optional[str] = None):
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)


class TrainingFault(PricingError):
    """Non-finite loss or parameter during training"""
    exit_code = 2

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        self.diagnostics = diagnostics or {}
        super().__init__(message)


class InternalError(PricingError):
    """Broken internal invariant (e.g. unknown group id)"""
    exit_code = 2


class OutputError(PricingError):
    """Failure reading or writing an artifact"""
    exit_code = 3

    def __init__(self, message: str, path: Optional[str] = None):
        self.path = path
        super().__init__(f"{message} [{path}]" if path else message)
