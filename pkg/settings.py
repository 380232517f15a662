import os
from dataclasses import dataclass

from dotenv import load_dotenv

from errors import InvalidInputError

load_dotenv()


def _env_int(name: str, default: int | None) -> int | None:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise InvalidInputError(f"{name} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class Settings:
    """Runtime configuration read from the environment (and a local .env file)."""

    seed: int | None = None
    jobs: int = 1
    support_cap: int = 12
    uniform_cap: int = 20
    sat_vars_cap: int = 24
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            seed=_env_int("WINLOSE_LAB_SEED", None),
            jobs=_env_int("WINLOSE_LAB_JOBS", 1),
            support_cap=_env_int("WINLOSE_LAB_SUPPORT_CAP", 12),
            uniform_cap=_env_int("WINLOSE_LAB_UNIFORM_CAP", 20),
            sat_vars_cap=_env_int("WINLOSE_LAB_SAT_VARS_CAP", 24),
            log_level=os.getenv("WINLOSE_LAB_LOG_LEVEL", "WARNING").upper(),
        )


def get_settings() -> Settings:
    return Settings.from_env()


def resolve_seed(cli_seed: int | None) -> int:
    """WINLOSE_LAB_SEED wins over --seed; both absent means seed 0."""
    env_seed = get_settings().seed
    if env_seed is not None:
        return env_seed
    return 0 if cli_seed is None else cli_seed
