from . import suite
from .registry import REGISTRY, CheckContext, CheckRecord, register, select

__all__ = ["suite", "REGISTRY", "CheckContext", "CheckRecord", "register", "select"]
