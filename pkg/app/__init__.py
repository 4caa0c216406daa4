"""Корневой пакет `python_diff_characters`.

Вычисления с точными дифференциальными характерами на конечных
симплициальных пространствах; всё содержимое лежит в `app.modules`.
"""

from . import modules

__all__ = ["modules"]
