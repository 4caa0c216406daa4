"""Текстовый логгер приложения."""

from .app_logger import AppLogger, DailyRotatingFileHandler, get_app_logger

__all__ = ["AppLogger", "DailyRotatingFileHandler", "get_app_logger"]
