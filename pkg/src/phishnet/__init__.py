"""Phishing-website prediction: ternary indicators, a small sigmoid network,
five-band verdicts, and the dataset plumbing around them."""

import logging as _logging

# library logging stays silent unless the application configures handlers
_logging.getLogger(__name__).addHandler(_logging.NullHandler())

from .classify import (
    BandThresholds,
    EvalReport,
    PhishVerdict,
    VerdictBand,
    band_score,
    build_dataset,
    classify,
    evaluate,
)
from .config import ExtractionConfig, load_extraction_config
from .errors import (
    ConfigError,
    ExtractionError,
    FetchError,
    FormatError,
    ModelFormatError,
    ModelVersionError,
    PhishnetError,
    ShapeError,
)
from .cli import CommandOutcome, run
from .estimator import PhishFeatureExtractor, PhishNetClassifier
from .features import (
    anchor_url_indicator,
    at_symbol_indicator,
    evaluate_indicator,
    extract_all,
    hex_char_indicator,
    ip_address_indicator,
    prefix_suffix_indicator,
    salutation_indicator,
    sfh_indicator,
    ssl_indicator,
    url_length_indicator,
)
from .indicators import (
    INDICATOR_COUNT,
    INDICATOR_NAMES,
    INDICATORS,
    Criterion,
    FeatureVector,
    IndicatorId,
    IndicatorValue,
    encode_value,
    indicator_by_name,
)
from .network import (
    BackpropTrace,
    LayerActivations,
    Network,
    TrainConfig,
    TrainingExample,
    backprop_update,
    forward,
    init_network,
    mse,
    perceptron_update,
    sigmoid,
    sigmoid_prime,
    train,
)
from .dataio import (
    ArchiveStore,
    DatasetSplit,
    export_feature_matrix,
    feature_matrix_csv,
    fetch_record,
    filter_stale,
    load_model,
    parse_feature_matrix,
    parse_phishtank_csv,
    parse_url_list,
    save_model,
    split_dataset,
)
from .records import LEGIT, PHISH, CertEvidence, DnsEvidence, WebsiteRecord

__version__ = "0.1.0"
