"""inkmatch: writer-independent on-line cursive character recognition.

Pipeline: stroke cleanup and resampling -> position/tangent features ->
DTW matching with envelope lower-bound pruning -> spatially organized
template model -> stroke-order-free recognition, plus evaluation protocols
and an HTTP service.
"""

from .config import EngineConfig
from .dtw import (
    Envelope,
    SearchStats,
    WarpPath,
    dtw_distance,
    envelope,
    lb_keogh,
    local_distance,
    nn_search,
)
from .evaluate import Report, dichotomous_eval, kfold_cv
from .features import (
    FeatureSeq,
    dedupe_points,
    extract_features,
    normalize_symbol,
    resample_stroke,
    resample_stroke_to,
)
from .ink import (
    Dataset,
    InkError,
    InkParseError,
    InkSymbol,
    ModelFormatError,
    Stroke,
    load_dataset,
    save_dataset,
    symbol_from_json,
    symbol_to_json,
)
from .pipeline import PreparedSymbol, prepare_symbol
from .recognizer import RecognitionResult, StrokeMatch, recognize, recognize_prepared
from .spatial import (
    Rect,
    Region,
    TopoRelation,
    centroid,
    find_shirorekha,
    joint_mbr,
    mbr,
    region_of,
    topological_relation,
)
from .synth import make_dataset, make_symbol
from .templates import (
    Model,
    Template,
    build_model,
    cluster_strokes,
    group_by_stroke_count,
    load_model,
    merge_features,
    save_model,
)

__version__ = "0.1.0"

__all__ = [
    "EngineConfig",
    "Envelope",
    "SearchStats",
    "WarpPath",
    "dtw_distance",
    "envelope",
    "lb_keogh",
    "local_distance",
    "nn_search",
    "Report",
    "dichotomous_eval",
    "kfold_cv",
    "FeatureSeq",
    "dedupe_points",
    "extract_features",
    "normalize_symbol",
    "resample_stroke",
    "resample_stroke_to",
    "Dataset",
    "InkError",
    "InkParseError",
    "InkSymbol",
    "ModelFormatError",
    "Stroke",
    "load_dataset",
    "save_dataset",
    "symbol_from_json",
    "symbol_to_json",
    "PreparedSymbol",
    "prepare_symbol",
    "RecognitionResult",
    "StrokeMatch",
    "recognize",
    "recognize_prepared",
    "Rect",
    "Region",
    "TopoRelation",
    "centroid",
    "find_shirorekha",
    "joint_mbr",
    "mbr",
    "region_of",
    "topological_relation",
    "make_dataset",
    "make_symbol",
    "Model",
    "Template",
    "build_model",
    "cluster_strokes",
    "group_by_stroke_count",
    "load_model",
    "merge_features",
    "save_model",
    "__version__",
]
