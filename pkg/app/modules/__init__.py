"""Пакет с модулями приложения: точная алгебра, комплексы, классификация, спуск, CLI и логирование."""

from . import logging
from . import exactalg, complex, chaincat, dccomplex, nerve, classify, descent, cli

__all__ = ["logging", "exactalg", "complex", "chaincat", "dccomplex", "nerve", "classify", "descent", "cli"]
