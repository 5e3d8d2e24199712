from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime settings, read from `PMB_` environment variables or `.env`."""

    model_config = SettingsConfigDict(env_file=".env", env_prefix="PMB_", extra="ignore")
    MAX_DIM: int = 64
    LOG_LEVEL: str = "WARNING"
    RATE_LIMITING_ENABLE: bool = False
    RATE_LIMITING_FREQUENCY: str = "2/3seconds"


settings = Settings()
