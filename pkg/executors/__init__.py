from .check_executor import CheckExecutor

__all__ = ["CheckExecutor"]
