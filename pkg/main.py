import sys
import logging

from cli.commands import main as cli_main
from core.config import config
from core.database import create_db_and_tables

# --- Application Setup ---

def setup_application():
    """
    Performs initial setup for the application: logging to stderr at the
    configured level, so that stdout carries only command output, and the
    run ledger.
    """
    logging.basicConfig(
        level=getattr(logging, str(config.logging.level).upper(), logging.INFO),
        format=config.logging.format,
        handlers=[
            logging.StreamHandler(sys.stderr),
        ]
    )

    logging.debug(f"Initializing run ledger at {config.database_path}...")
    create_db_and_tables()


def main():
    """
    The main entry point of the application.
    """
    setup_application()
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == '__main__':
    main()
