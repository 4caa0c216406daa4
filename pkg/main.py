"""
Точка входа: запускает командную строку `diffchar`.

Пример:

```bash
python main.py cohomology --complex torus_min --ring Z --degree 1
```
"""

import sys

from app.modules.cli import main


if __name__ == "__main__":
    sys.exit(main())
