"""
neurotrade - command-line application
Run with: python app.py run --config config.example.yaml
HTTP API: python -m neurotrade.api.main
"""
import sys

from neurotrade.cli.main import main


if __name__ == "__main__":
    sys.exit(main())
