import pytest

from phishnet.errors import ShapeError
from phishnet.indicators import (
    INDICATOR_COUNT,
    INDICATOR_NAMES,
    INDICATORS,
    Criterion,
    FeatureVector,
    IndicatorValue,
    encode_value,
    indicator_by_name,
)


def test_exactly_27_indicators():
    assert INDICATOR_COUNT == 27
    assert len(INDICATORS) == 27
    assert len(set(INDICATOR_NAMES)) == 27


def test_criterion_partition_sizes():
    sizes = {}
    for ind in INDICATORS:
        sizes[ind.criterion] = sizes.get(ind.criterion, 0) + 1
    assert sizes == {
        Criterion.URL_DOMAIN_IDENTITY: 5,
        Criterion.SECURITY_ENCRYPTION: 4,
        Criterion.SOURCE_CODE_JAVASCRIPT: 5,
        Criterion.PAGE_STYLE_CONTENTS: 5,
        Criterion.WEB_ADDRESS_BAR: 5,
        Criterion.SOCIAL_HUMAN_FACTOR: 3,
    }


def test_group_indices_are_one_based_and_contiguous():
    by_criterion = {}
    for ind in INDICATORS:
        by_criterion.setdefault(ind.criterion, []).append(ind.index)
    for indices in by_criterion.values():
        assert indices == list(range(1, len(indices) + 1))


def test_encoding_values():
    assert encode_value(IndicatorValue.LEGITIMATE) == 0.0
    assert encode_value(IndicatorValue.DOUBTFUL) == 0.5
    assert encode_value(IndicatorValue.PHISHY) == 1.0


def test_value_ordering():
    assert IndicatorValue.LEGITIMATE < IndicatorValue.DOUBTFUL < IndicatorValue.PHISHY


def test_canonical_order_starts_and_ends_right():
    # spot anchors for the frozen ordering
    assert INDICATOR_NAMES[0] == "using_ip_address"
    assert INDICATOR_NAMES[5] == "ssl_certificate"
    assert INDICATOR_NAMES[13] == "server_form_handler"
    assert INDICATOR_NAMES[22] == "at_symbol"
    assert INDICATOR_NAMES[-1] == "buying_time"


def test_lookup_by_name():
    ind = indicator_by_name("at_symbol")
    assert ind.criterion is Criterion.WEB_ADDRESS_BAR
    with pytest.raises(KeyError):
        indicator_by_name("not_an_indicator")


def test_feature_vector_shape_enforced():
    with pytest.raises(ShapeError):
        FeatureVector(tuple([IndicatorValue.LEGITIMATE] * 26))


def test_feature_vector_access_and_encoding():
    values = tuple([IndicatorValue.DOUBTFUL] * 27)
    fv = FeatureVector(values)
    assert fv["using_ip_address"] is IndicatorValue.DOUBTFUL
    assert fv.encode() == [0.5] * 27
    assert list(fv.as_dict()) == list(INDICATOR_NAMES)
