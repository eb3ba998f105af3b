"""
Report schemas

Pydantic models for every CLI result. A Report serializes with
model_dump_json and reads back with model_validate_json; the result
payload is picked by its "kind" field.
"""

from datetime import datetime, timezone
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field

from src.complex.io import ComplexDocument


class InputDigest(BaseModel):
    """What the command was run on."""

    path: Optional[str] = Field(None, description="Input file, if any")
    m: int = Field(..., ge=1, description="Ground set size")
    labels: List[int] = Field(default_factory=list, description="Ground set labels")
    face_count: int = Field(..., description="Number of faces, the empty face included")
    facet_count: int = Field(..., description="Number of maximal faces")
    dimension: int = Field(..., description="Dimension of the complex (-1 for {∅})")
    ghost_vertices: List[int] = Field(default_factory=list, description="Labels whose singleton is not a face")
    flag: bool = Field(..., description="Whether every missing face has at most two vertices")
    chordal: Optional[bool] = Field(None, description="Whether the 1-skeleton is chordal")


class BettiEntry(BaseModel):
    degree: int
    rank: int = Field(..., ge=0)


class SeriesTerm(BaseModel):
    exponent: int = Field(..., ge=0)
    coefficient: int


# =============================================================================
# PAYLOADS
# =============================================================================

class InfoPayload(BaseModel):
    kind: Literal["info"] = "info"
    f_vector: List[int] = Field(..., description="Face counts by size; index 0 counts the empty face")
    facets: List[List[int]]
    missing_faces: List[List[int]]
    connected_components: int
    flag_witness: Optional[List[int]] = Field(None, description="A missing face with three or more vertices")


class FlagifyPayload(BaseModel):
    kind: Literal["flagify"] = "flagify"
    added_faces: List[List[int]]
    flag_complex: ComplexDocument
    changed: bool
    output_path: Optional[str] = None
    delooping: Optional[str] = Field(None, description="'deloops' or 'undetermined'")
    delooping_reason: Optional[str] = Field(None, description="'identity', 'chordal' or 'chordless_cycle'")


class ChordalPayload(BaseModel):
    kind: Literal["chordal"] = "chordal"
    chordal: bool
    ordering: Optional[List[int]] = Field(None, description="Perfect elimination ordering (earlier neighbours form a clique)")
    cycle: Optional[List[int]] = Field(None, description="Chordless cycle of length >= 4")


class SummandModel(BaseModel):
    omega: List[int]
    multiplicity: int = Field(..., ge=1)
    name: str
    sphere_dim: Optional[int] = None


class SphereCount(BaseModel):
    dim: int
    count: int


class DecompositionPayload(BaseModel):
    kind: Literal["decomposition"] = "decomposition"
    mode: Literal["moment-angle", "spheres", "symbolic"]
    dims: Optional[List[int]] = None
    summands: List[SummandModel]
    spheres: List[SphereCount] = Field(default_factory=list, description="Wedge spheres per dimension")
    poincare: List[SeriesTerm] = Field(default_factory=list)
    assumptions: List[str] = Field(default_factory=list)
    subsets_scanned: int = 0
    zero_multiplicity: int = 0

    model_config = {
        "json_schema_extra": {
            "examples": [
                {
                    "kind": "decomposition",
                    "mode": "moment-angle",
                    "dims": [2, 2, 2],
                    "summands": [{"omega": [1, 3], "multiplicity": 1, "name": "S(Y_1^Y_3)", "sphere_dim": 3}],
                    "spheres": [{"dim": 3, "count": 1}],
                }
            ]
        }
    }


class BettiPayload(BaseModel):
    kind: Literal["betti"] = "betti"
    dims: List[int]
    ranks: List[BettiEntry]
    max_degree: Optional[int] = None


class HomologyWitnessModel(BaseModel):
    omega: List[int]
    degree: int
    rank: int


class VerifyPayload(BaseModel):
    kind: Literal["verify"] = "verify"
    status: Literal["pass", "fail", "not_co_h"]
    chordal: bool
    betti: List[BettiEntry]
    wedge_betti: Optional[List[BettiEntry]] = None
    cycle: Optional[List[int]] = None
    witness: Optional[HomologyWitnessModel] = None
    witness_betti_degree: Optional[int] = None
    witness_betti_rank: Optional[int] = None
    mismatches: List[List[int]] = Field(default_factory=list, description="[degree, oracle, wedge]")
    message: str = ""


class FactorModel(BaseModel):
    word: List[int]
    multidegree: List[int]
    bracket: str
    sphere_dim: int
    kind: Literal["loop_sphere", "sphere"]
    annotation: str = ""


class FactorCount(BaseModel):
    kind: str
    sphere_dim: int
    count: int


class SeriesCheckModel(BaseModel):
    passed: bool
    degree: int
    coefficients: List[int]
    residual: List[List[int]] = Field(default_factory=list, description="[exponent, product, expected]")


class HiltonMilnorPayload(BaseModel):
    kind: Literal["hilton-milnor"] = "hilton-milnor"
    dims: List[int]
    max_dim: int
    split_hopf: bool = False
    factors: List[FactorModel]
    counts: List[FactorCount]
    series_check: Optional[SeriesCheckModel] = None


class WedgeLetterModel(BaseModel):
    index: int
    summand: str
    copy_number: int
    sphere_dim: int


class LoopspacePayload(BaseModel):
    kind: Literal["loopspace"] = "loopspace"
    max_dim: int
    split_hopf: bool = False
    letters: List[WedgeLetterModel]
    factors: List[FactorModel]
    counts: List[FactorCount]
    circle_factors: int = Field(..., description="Circles split off from the loops on the Davis–Januszkiewicz space")
    series: List[int] = Field(default_factory=list, description="Loop homology series coefficients, checked")


class ErrorPayload(BaseModel):
    kind: Literal["error"] = "error"
    error_type: str
    message: str
    certificate: Optional[List[int]] = Field(None, description="Missing face or chordless cycle")
    line_number: Optional[int] = None


Payload = Union[
    InfoPayload,
    FlagifyPayload,
    ChordalPayload,
    DecompositionPayload,
    BettiPayload,
    VerifyPayload,
    HiltonMilnorPayload,
    LoopspacePayload,
    ErrorPayload,
]


class Report(BaseModel):
    """Everything a subcommand produced."""

    command: List[str] = Field(..., description="argv echo")
    tool_version: str
    exit_code: int = 0
    input: Optional[InputDigest] = None
    result: Payload = Field(..., discriminator="kind")
    timing_seconds: float = Field(0.0, ge=0.0)
    config: Dict[str, Any] = Field(default_factory=dict)
    created_at: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))
