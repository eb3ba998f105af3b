from src.flag.flagify import (
    DeloopingCertificate,
    FlagificationResult,
    delooping_certificate,
    flag_closure,
    flagify,
    is_minimal_flag_extension,
)

__all__ = [
    "DeloopingCertificate",
    "FlagificationResult",
    "delooping_certificate",
    "flag_closure",
    "flagify",
    "is_minimal_flag_extension",
]
