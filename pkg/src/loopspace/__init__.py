from src.loopspace.factors import (
    HMFactor,
    SeriesCheck,
    factor_counts,
    factor_series,
    hm_factors,
    series_identity_check,
    split_hopf,
    wedge_loop_series,
)
from src.loopspace.lyndon import (
    FactorLimitError,
    LieBasisElement,
    format_bracket,
    is_lyndon,
    lyndon_bracket,
    lyndon_words,
    witt_count,
    witt_number,
)
from src.loopspace.moment_angle import LoopSpaceDecomposition, WedgeLetter, loop_zk_factors

__all__ = [
    "FactorLimitError",
    "HMFactor",
    "LieBasisElement",
    "LoopSpaceDecomposition",
    "SeriesCheck",
    "WedgeLetter",
    "factor_counts",
    "factor_series",
    "format_bracket",
    "hm_factors",
    "is_lyndon",
    "loop_zk_factors",
    "lyndon_bracket",
    "lyndon_words",
    "series_identity_check",
    "split_hopf",
    "wedge_loop_series",
    "witt_count",
    "witt_number",
]
