# run.py
import sys
from pathlib import Path

# Adiciona o diretório raiz ao path do Python
current_dir = Path(__file__).parent.absolute()
sys.path.insert(0, str(current_dir))

from src.interfaces.cli.cli_app import main


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("Execução interrompida pelo usuário.", file=sys.stderr)
        sys.exit(2)
