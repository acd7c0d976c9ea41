from pydantic import BaseModel

from app.cli import options
from app.cli.decorators import handle_pipeline_errors
from app.cli.output import emit
from app.config import OUTPUT_VERSION, config_from_env


class ConfigDump(BaseModel):
    version: str = OUTPUT_VERSION
    config: dict


@handle_pipeline_errors
def show_config(out: options.Out = None):
    """
    Print the effective configuration: built-in defaults overlaid with CRISIS_SUMM_* variables.
    """
    emit(ConfigDump(config=config_from_env().model_dump(mode="json")), out)
