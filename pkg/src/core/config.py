from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict


class Settings(BaseSettings):
    """Counting and enumeration defaults, overridden by command-line flags only"""

    model_config = SettingsConfigDict(
        case_sensitive=False,
        frozen=True,
    )

    # Enumeration oracles
    ENUMERATION_CAP: int = Field(default=5, ge=1)  # 2^20 digraphs at n = 5
    FORCED_ENUMERATION_LIMIT: int = Field(default=6, ge=1)  # 2^30 digraphs, minutes
    WORKERS: int = Field(default=1, ge=1)

    # Rendering (published table layout)
    SIG_DIGITS: int = Field(default=12, ge=1)
    SCIENTIFIC_PLACES: int = Field(default=6, ge=0)
    PAPER_EXACT_MAX_N: int = Field(default=12, ge=0)

    # Logging
    LOG_LEVEL: str = "WARNING"

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        # No environment or file sources: every override comes from a flag
        return (init_settings,)


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()


settings = get_settings()
