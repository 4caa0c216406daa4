"""Тесты пакета: точная алгебра, комплексы, классификация, спуск, CLI и логирование."""
