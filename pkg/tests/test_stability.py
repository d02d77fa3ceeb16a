import dataclasses
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diavib import (HBAR, SECOND, THIRD, MoleculeParams, char_roots,
                    classify_levels, cutoff_frequency2, cutoff_frequency3,
                    derive_params, dissociation_level2, dissociation_level3,
                    frequencies, molecule_by_name, spacing_root,
                    stability_report)
from diavib.stability import MARGINAL, STABLE, UNSTABLE

# frozen: independently computed dissociation levels and cut-offs
H2_ND2 = 17.507008299786996
H2_ND3 = 16.507008299787
HCL_ND2 = 23.57720239622494
HCL_ND3 = 22.577202396224983
H2_CUTOFF2 = 44793841693448.7
HCL_CUTOFF2 = 22134333730496.453
H2_CUTOFF3_LITERAL = 49824467473201.484
H2_CUTOFF3_FROM_W1 = 49763588806963.91


def test_dissociation_levels_frozen(h2, hcl):
    assert dissociation_level2(h2) == pytest.approx(H2_ND2, rel=1e-13)
    assert dissociation_level3(h2) == pytest.approx(H2_ND3, rel=1e-13)
    assert dissociation_level2(hcl) == pytest.approx(HCL_ND2, rel=1e-13)
    assert dissociation_level3(hcl) == pytest.approx(HCL_ND3, rel=1e-13)


def test_cutoffs_frozen(h2, hcl):
    assert cutoff_frequency2(h2) == pytest.approx(H2_CUTOFF2, rel=1e-14)
    assert cutoff_frequency2(hcl) == pytest.approx(HCL_CUTOFF2, rel=1e-14)
    c3 = cutoff_frequency3(h2)
    assert c3.literal == pytest.approx(H2_CUTOFF3_LITERAL, rel=1e-12)
    assert c3.from_omega1 == pytest.approx(H2_CUTOFF3_FROM_W1, rel=1e-12)
    # the two readings are close but genuinely distinct
    assert c3.literal != c3.from_omega1
    assert abs(c3.literal - c3.from_omega1) / c3.from_omega1 < 2e-3


def test_third_order_level_sits_one_below_second(h2, hcl):
    # the cubic term moves the dissociation level down by exactly one
    for m in (h2, hcl):
        assert dissociation_level3(m) == pytest.approx(dissociation_level2(m) - 1.0, rel=1e-12)


@given(alpha=st.floats(min_value=1e-4, max_value=0.5))
def test_dissociation_identity_across_alpha(alpha):
    omega0 = 5e14
    m = MoleculeParams(name="X", omega0=omega0, De=HBAR * omega0 / (2.0 * alpha),
                       mu=1e-24, xe=0.0)
    nd2 = dissociation_level2(m)
    nd3 = dissociation_level3(m)
    assert nd3 == pytest.approx(nd2 - 1.0, rel=1e-9, abs=1e-9 * nd2)


@pytest.mark.parametrize("name", ["H2", "HCl"])
def test_spacing_root_matches_frequency_route(name):
    # the ladder spacing closes exactly where the lower frequency component
    # crosses zero; two different derivations of the same level
    m = molecule_by_name(name)
    assert spacing_root(SECOND, m) == pytest.approx(dissociation_level2(m), rel=1e-12)
    assert spacing_root(THIRD, m) == pytest.approx(dissociation_level3(m), rel=1e-6)


@pytest.mark.parametrize("n,order", [(0, SECOND), (5, THIRD), (12, SECOND)])
def test_char_roots_structure(h2, n, order):
    cr = char_roots(n, order, h2)
    fp = frequencies(n, order, h2)
    assert cr.lambda1 == complex(0.0, fp.w2)
    assert cr.lambda2 == complex(0.0, -fp.w1)
    prod = cr.lambda1 * cr.lambda2
    assert prod.imag == 0.0
    assert prod.real == pytest.approx(fp.w1 * fp.w2, rel=1e-12)
    s = cr.lambda1 + cr.lambda2
    assert s.real == 0.0
    assert s.imag == pytest.approx(-fp.beta_eff, rel=1e-9)


def test_roots_satisfy_characteristic_polynomial(h2):
    for n in (0, 7):
        fp = frequencies(n, THIRD, h2)
        for lam in (complex(0.0, fp.w2), complex(0.0, -fp.w1)):
            res = (lam + 0.5j * fp.beta_eff) ** 2 + fp.wn ** 2
            assert abs(res) <= 1e-12 * fp.wn ** 2


def test_cutoff2_is_exactly_alpha_omega0(h2, hcl):
    for m in (h2, hcl):
        assert cutoff_frequency2(m) == derive_params(m).alpha * m.omega0


def test_cutoff2_equals_w1_at_dissociation(h2):
    nd2 = dissociation_level2(h2)
    fp = frequencies(nd2, SECOND, h2)
    assert fp.w1 == pytest.approx(cutoff_frequency2(h2), rel=1e-10)
    assert abs(fp.w2) < 1e-12 * h2.omega0


def test_cutoff3_lower_component_vanishes(h2, hcl):
    for m in (h2, hcl):
        nd3 = dissociation_level3(m)
        assert abs(frequencies(nd3, THIRD, m).w2) <= 1e-9 * m.omega0


def test_classification_flip_h2(h2):
    labels = {lc.n: lc.classification for lc in classify_levels(h2, SECOND, 20)}
    assert labels[0] == STABLE
    assert labels[17] == STABLE
    assert labels[18] == UNSTABLE
    assert labels[20] == UNSTABLE


def test_marginal_band():
    # crafted so w2 = 0 exactly at n = 1 (alpha = 0.5 bit-exact)
    m = MoleculeParams(name="T", omega0=1e15, De=HBAR * 1e15, mu=1e-24, xe=0.0)
    assert frequencies(1, SECOND, m).w2 == 0.0
    labels = classify_levels(m, SECOND, 2)
    assert labels[0].classification == STABLE
    assert labels[1].classification == MARGINAL
    assert labels[2].classification == UNSTABLE


def test_classify_levels_validates_n_max(h2):
    from diavib import ValidationError
    with pytest.raises(ValidationError):
        classify_levels(h2, SECOND, -1)


def test_stability_report_h2(h2):
    rep = stability_report(h2)
    assert rep.last_bound_n2 == 17
    assert rep.last_bound_n3 == 16
    assert rep.cutoff2 == cutoff_frequency2(h2)
    assert {lc.order for lc in rep.per_level} == {SECOND, THIRD}
    ns = [lc.n for lc in rep.per_level if lc.order == SECOND]
    assert ns == list(range(21))  # ceil(17.507) + 2


def test_stability_report_respects_n_max(h2):
    rep = stability_report(h2, n_max=3)
    assert [lc.n for lc in rep.per_level if lc.order == SECOND] == [0, 1, 2, 3]


def test_harmonic_limit_unbounded(h2):
    m = dataclasses.replace(h2, De=math.inf)
    assert math.isinf(dissociation_level2(m))
    assert math.isinf(dissociation_level3(m))
    assert cutoff_frequency2(m) == 0.0
    c3 = cutoff_frequency3(m)
    assert c3.literal == 0.0 and c3.from_omega1 == 0.0
    rep = stability_report(m)
    assert rep.last_bound_n2 is None and rep.last_bound_n3 is None
    assert all(lc.classification == STABLE for lc in rep.per_level)
