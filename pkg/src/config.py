import os
from dataclasses import dataclass
from dotenv import load_dotenv

load_dotenv()


def _env_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


@dataclass
class Config:
    # Enumeration guards (every algorithm scans up to 2^m vertex subsets)
    max_vertices: int = int(os.getenv("POLYFLAG_MAX_VERTICES", "24"))
    oracle_max_vertices: int = int(os.getenv("POLYFLAG_ORACLE_MAX_VERTICES", "10"))

    # Logging
    log_level: str = os.getenv("POLYFLAG_LOG_LEVEL", "WARNING")
    log_file: str = os.getenv("POLYFLAG_LOG_FILE", "")

    # Randomized sweeps
    random_seed: int = int(os.getenv("POLYFLAG_SEED", "20240601"))

    # Loop-space truncation (target sphere dimension)
    default_max_dim: int = int(os.getenv("POLYFLAG_MAX_DIM", "16"))

    # Homology oracle
    cone_shortcut: bool = _env_bool("POLYFLAG_CONE_SHORTCUT", "true")

    def validate(self):
        """Validate all configuration"""
        errors = []

        if not 1 <= self.max_vertices <= 30:
            errors.append(f"POLYFLAG_MAX_VERTICES must be in 1..30, got {self.max_vertices}")

        if not 1 <= self.oracle_max_vertices <= self.max_vertices:
            errors.append(
                f"POLYFLAG_ORACLE_MAX_VERTICES must be in 1..{self.max_vertices}, "
                f"got {self.oracle_max_vertices}"
            )

        if self.log_level.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            errors.append(f"POLYFLAG_LOG_LEVEL not recognised: {self.log_level}")

        if self.default_max_dim < 1:
            errors.append(f"POLYFLAG_MAX_DIM must be positive, got {self.default_max_dim}")

        if errors:
            error_msg = "Config errors:\n" + "\n".join(errors)
            raise ValueError(error_msg)

    def display(self):
        print("\n Config:")
        print(f"  Max vertices (core): {self.max_vertices}")
        print(f"  Max vertices (oracle): {self.oracle_max_vertices}")
        print(f"  Log level: {self.log_level}")
        print(f"  Random seed: {self.random_seed}")
        print(f"  Default max dim: {self.default_max_dim}")
        print(f"  Cone shortcut: {self.cone_shortcut}")

    def get_logging_config(self) -> dict:
        """
        Get configuration parameters for reports.
        Used to track which settings produced each result.

        Returns:
            Dictionary with configuration values
        """
        return {
            "config_max_vertices": self.max_vertices,
            "config_oracle_max_vertices": self.oracle_max_vertices,
            "config_random_seed": self.random_seed,
            "config_default_max_dim": self.default_max_dim,
            "config_cone_shortcut": self.cone_shortcut,
        }


def get_config() -> Config:
    config = Config()
    config.validate()
    return config
