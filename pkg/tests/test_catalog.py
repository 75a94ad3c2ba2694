import pytest

from tpalg import catalog
from tpalg.algebra import validate


def all_instances():
    yield "sl2", {"field": "Q"}
    yield "sl2", {"field": "GF3"}
    for a in range(3):
        for b in range(3):
            yield "tp_sl2_gf3", {"alpha": a, "beta": b}
    yield "grassmann_derivation_q", {"with_t": 1}
    yield "zero", {"dim": 3}
    for key in catalog.keys():
        if key not in ("sl2", "tp_sl2_gf3"):
            yield key, {}


@pytest.mark.parametrize("key,params", list(all_instances()), ids=lambda x: str(x))
def test_claims_hold(key, params):
    assert validate(catalog.get(key, **params)).ok
    for claim, actual, ok in catalog.verify(key, **params):
        assert ok, (claim.name, claim.value, actual)


def test_every_claim_names_its_validator():
    for key in catalog.keys():
        for c in catalog.entry(key).claims:
            assert c.validator and c.provenance in ("PAPER", "DERIVED", "TRIVIAL")


def test_when_filters_claims():
    names = {c.name for c in catalog.expected("tp_sl2_gf3", alpha=2, beta=2)}
    assert "kantor_simple" not in names
    [tp] = [c for c in catalog.expected("tp_sl2_gf3", alpha=2, beta=2) if c.name == "is_tp"]
    assert tp.value is False
    dims = [c.value for c in catalog.expected("sl2", field="GF3") if c.name == "halfder_bracket_dim"]
    assert dims == [5]


def test_unknown_key_and_param():
    with pytest.raises(catalog.CatalogError):
        catalog.get("nope")
    with pytest.raises(catalog.CatalogError):
        catalog.get("sl2", colour="red")


def test_builders_are_deterministic():
    for key in catalog.keys():
        assert catalog.get(key) == catalog.get(key)
