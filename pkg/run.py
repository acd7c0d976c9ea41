import logging

from dotenv import load_dotenv

from app.cli.client import run
from app.utils.logging import setup_logging

# Load environment variables from .env file
load_dotenv()

# Set up logging
setup_logging()
logger = logging.getLogger(__name__)


if __name__ == "__main__":
    logger.info("Starting crisis-summ")
    run()
