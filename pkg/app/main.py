import logging

from app.cli import cli
from app.config.settings import settings

# Configurar logging
logging.basicConfig(
    level=settings.LOG_LEVEL.upper(),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)


def run() -> None:
    """Entry point of the ``ssbcov`` console script."""
    logger.debug("Starting %s v%s (%s)", settings.PROJECT_NAME, settings.VERSION, settings.ENVIRONMENT)
    cli()


if __name__ == "__main__":
    run()
