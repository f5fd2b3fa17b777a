from __future__ import annotations

from coxskel.cli import app

if __name__ == "__main__":
    app()
