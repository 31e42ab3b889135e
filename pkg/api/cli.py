"""
cli.py

Ponto de entrada da linha de comando, sem subir a aplicação Flask:

    python api/cli.py run --suite qlba-axioms --dim 3
"""

from src.commands import verify

if __name__ == '__main__':
    verify()
