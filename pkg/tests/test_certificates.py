import pytest

from poscert.certificates import (
    ax_iso,
    ax_sd_mono,
    ax_sd_vertex,
    deserialize,
    r_pushout,
    serialize,
    terminal_cofibrant,
    verify,
    verify_cofibrant,
)
from poscert.colimits import Span
from poscert.errors import ParseError
from poscert.poset import MonotoneMap, chain, from_covers, identity, singleton
from poscert.smallcat import small_poset_witness
from poscert.witnesses import _join_min_inclusion, named_small_posets, semilattice_witness

PT = singleton()


def test_vertex_axiom_verifies():
    rep = verify(ax_sd_vertex(2, 0))
    assert rep.ok and not rep.uses_sd_mono


def test_sd_mono_flagged():
    c = ax_sd_mono(MonotoneMap(chain(0), chain(1), (0,)))
    rep = verify(c)
    assert rep.ok and rep.uses_sd_mono


def test_compose_mismatch_fails_at_root():
    c1 = ax_sd_vertex(1, 0)
    c2 = ax_sd_vertex(2, 0)
    from poscert.certificates import CofibrationCertificate
    bad = CofibrationCertificate("R_COMPOSE", c2.conclusion, premises=(c1, c2))
    rep = verify(bad)
    assert not rep.ok
    path, check, _, detail = rep.first_failure
    assert path == "root" and "CompositionMismatch" in detail


def test_retract_rule_checks_everything():
    diamond = from_covers(["b", "m1", "m2", "t"],
                          [("b", "m1"), ("b", "m2"), ("m1", "t"), ("m2", "t")])
    cert = _join_min_inclusion(diamond, 0)
    assert verify(cert).ok
    # perturbing the retraction on a pinned entry must fail
    from dataclasses import replace
    p = cert.ret_p
    image = list(p.image)
    pinned = cert.ret_i.image[1]
    image[pinned] = 3 if image[pinned] != 3 else 2
    from poscert.poset import is_monotone_data
    if is_monotone_data(p.source, p.target, image):
        bad = replace(cert, ret_p=MonotoneMap(p.source, p.target, tuple(image)))
        assert not verify(bad).ok


def test_cofibrant_trivial_and_mismatch():
    c = ax_iso(identity(PT))
    good = terminal_cofibrant(PT, c)
    assert verify_cofibrant(good).ok
    wrong = terminal_cofibrant(chain(1), c)
    rep = verify_cofibrant(wrong)
    assert not rep.ok
    assert any("ObjectMismatch" in e[3] for e in rep.entries if not e[2])


def test_cofibrant_diamond():
    diamond = from_covers(["b", "m1", "m2", "t"],
                          [("b", "m1"), ("b", "m2"), ("m1", "t"), ("m2", "t")])
    rep = semilattice_witness(diamond)
    assert verify_cofibrant(rep.certificate).ok


def test_roundtrip_leaf():
    c = ax_sd_vertex(2, 0)
    c2 = deserialize(serialize(c))
    assert c2.rule == c.rule and c2.conclusion.image == c.conclusion.image
    assert c2.conclusion.target == c.conclusion.target


def test_roundtrip_largest_hand_certificate():
    p7 = named_small_posets()["P7"]
    rep = small_poset_witness(p7)
    cert = rep.certificate
    blob = serialize(cert)
    back = deserialize(blob)
    assert verify_cofibrant(back).ok
    assert back.object == cert.object
    assert back.cert.rule == cert.cert.rule
    assert serialize(back) == blob


def test_truncated_input_parse_error():
    blob = serialize(ax_sd_vertex(2, 0))
    with pytest.raises(ParseError):
        deserialize(blob[: len(blob) // 2])
    with pytest.raises(ParseError):
        deserialize(b"not a certificate\n")


def test_flipped_entry_fails_verification_not_parse():
    import re

    from poscert.errors import InvalidCertificate

    diamond = from_covers(["b", "m1", "m2", "t"],
                          [("b", "m1"), ("b", "m2"), ("m1", "t"), ("m2", "t")])
    rep = semilattice_witness(diamond)
    blob = serialize(rep.certificate).decode()
    entries = list(re.finditer(r"s(\d+)->t(\d+)", blob))
    assert entries
    found_failing = False
    for match in entries:
        old = match.group(0)
        new = f"s{match.group(1)}->t{int(match.group(2)) + 1}"
        mutated = blob[:match.start()] + new + blob[match.end():]
        try:
            cert = deserialize(mutated.encode())
        except (ParseError, InvalidCertificate):
            continue
        if not verify_cofibrant(cert).ok:
            found_failing = True
            break
    assert found_failing


def test_pushout_certificate_roundtrip():
    c1 = chain(1)
    span = Span(PT, MonotoneMap(PT, c1, (0,)), MonotoneMap(PT, c1, (0,)))
    cert = r_pushout(_join_min_inclusion(c1, 0), span, "right")
    assert verify(cert).ok
    back = deserialize(serialize(cert))
    assert verify(back).ok and back.conclusion.image == cert.conclusion.image


def test_every_catalog_certificate_roundtrips():
    # serialization regression across every rule combination the catalog
    # produces, including empty posets inside initial-object splices
    from poscert.catalog import certify_all
    from poscert.certificates import CofibrantCertificate, verify_cofibrant

    for entry in certify_all(5):
        certs = [entry.witness.certificate,
                 *entry.witness.minimum_certificates.values()]
        for cert in certs:
            blob = serialize(cert)
            back = deserialize(blob)
            if isinstance(back, CofibrantCertificate):
                assert verify_cofibrant(back).ok
            else:
                assert verify(back).ok
            assert serialize(back) == blob


def test_verifier_reports_oversized_axiom_instead_of_raising():
    from dataclasses import replace

    from poscert.certificates import CofibrationCertificate
    from poscert.poset import antichain

    base = ax_sd_vertex(2, 1)
    huge = replace(base, ax_n=40, ax_k=1)
    rep = verify(huge)
    assert not rep.ok  # reported, not raised
