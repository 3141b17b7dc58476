import pytest

from poscert.cli import main
from poscert.errors import ParseError
from poscert.formats import parse_poset_file, write_poset_file
from poscert.poset import chain, from_covers

DIAMOND_TEXT = """# a comment
poset diamond
elements: bot m1 m2 top
covers: bot<m1 bot<m2 m1<top m2<top
"""


def test_poset_file_roundtrip(tmp_path):
    name, p = parse_poset_file(DIAMOND_TEXT)
    assert name == "diamond" and p.n == 4
    again_name, again = parse_poset_file(write_poset_file(name, p))
    assert again == p


def test_poset_file_errors():
    with pytest.raises(ParseError) as err:
        parse_poset_file("poset x\ncovers: a<b\n")
    assert err.value.line == 2
    with pytest.raises(ParseError):
        parse_poset_file("poset x\nelements: a b\ncovers: a<b\nextra line\n")
    with pytest.raises(ParseError):
        parse_poset_file("poset x\nelements: a-b\ncovers:\n")
    with pytest.raises(ParseError):
        parse_poset_file("")


def test_empty_covers_allowed():
    _, p = parse_poset_file("poset a\nelements: x y\ncovers:\n")
    assert p.relation_pairs() == 0


def test_cli_analyze_verify_roundtrip(tmp_path, capsys):
    poset_file = tmp_path / "d.poset"
    poset_file.write_text(DIAMOND_TEXT)
    cert_file = tmp_path / "d.cert"
    assert main(["analyze", str(poset_file), "--emit", str(cert_file)]) == 0
    out = capsys.readouterr().out
    assert "route: sliscof(join); cofibrant: VERIFIED" in out
    assert "minima: 1/1 VERIFIED" in out
    assert main(["verify", str(cert_file), str(poset_file)]) == 0
    # the minimum-inclusion certificate is emitted and verifies on its own
    assert main(["verify", str(cert_file) + ".min0", str(poset_file)]) == 0

    other = tmp_path / "c.poset"
    other.write_text("poset c\nelements: a b c d\ncovers: a<b b<c c<d\n")
    assert main(["verify", str(cert_file), str(other)]) == 1


def test_cli_verify_mutated_certificate(tmp_path, capsys):
    import re

    poset_file = tmp_path / "d.poset"
    poset_file.write_text(DIAMOND_TEXT)
    cert_file = tmp_path / "d.cert"
    main(["analyze", str(poset_file), "--emit", str(cert_file)])
    text = cert_file.read_text()
    for match in re.finditer(r"s(\d+)->t(\d+)", text):
        new = f"s{match.group(1)}->t{int(match.group(2)) + 1}"
        mutated = text[:match.start()] + new + text[match.end():]
        cert_file.write_text(mutated)
        capsys.readouterr()
        code = main(["verify", str(cert_file), str(poset_file)])
        out = capsys.readouterr().out
        if code == 1:
            assert "FAILED" in out
            return
    raise AssertionError("no single-entry flip produced a caught failure")


def test_cli_parse_errors(tmp_path):
    bad = tmp_path / "bad.poset"
    bad.write_text("this is not a poset file\n")
    assert main(["analyze", str(bad)]) == 2
    cyc = tmp_path / "cyc.poset"
    cyc.write_text("poset c\nelements: a b\ncovers: a<b b<a\n")
    assert main(["analyze", str(cyc)]) == 2
    good = tmp_path / "g.poset"
    good.write_text(DIAMOND_TEXT)
    garbage = tmp_path / "g.cert"
    garbage.write_text("certfile 9\n")
    assert main(["verify", str(garbage), str(good)]) == 2


def test_cli_enumerate_and_dump(tmp_path, capsys):
    out_dir = tmp_path / "dump"
    assert main(["enumerate", "4", "--dump", str(out_dir)]) == 0
    out = capsys.readouterr().out
    assert "n=4: total=16 connected=10" in out
    files = sorted(out_dir.glob("*.poset"))
    assert len(files) == 16
    for f in files:
        parse_poset_file(f.read_text())
    assert main(["enumerate", "9"]) == 2


def test_cli_analyze_larger_structural_poset(tmp_path, capsys):
    f = tmp_path / "chain6.poset"
    f.write_text(write_poset_file("c6", chain(6)))
    assert main(["analyze", str(f)]) == 0
    out = capsys.readouterr().out
    assert "cacof" in out


def test_cli_analyze_no_route(tmp_path, capsys):
    # a six-element poset outside every structural class
    p = from_covers(["a", "b", "c", "d", "e", "f"],
                    [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"),
                     ("c", "e"), ("d", "f")])
    f = tmp_path / "hard.poset"
    f.write_text(write_poset_file("hard", p))
    code = main(["analyze", str(f)])
    out = capsys.readouterr().out
    assert code == 1 and "no witness route" in out


def test_cli_analyze_empty_poset(tmp_path, capsys):
    f = tmp_path / "empty.poset"
    f.write_text("poset empty\nelements:\ncovers:\n")
    assert main(["analyze", str(f)]) == 0
    out = capsys.readouterr().out
    assert "cofibrant: VERIFIED" in out


def test_cli_analyze_disconnected_with_large_component(tmp_path, capsys):
    from poscert.poset import coproduct, from_covers

    big, _ = coproduct([chain(6), from_covers(["m", "a", "b"],
                                              [("m", "a"), ("m", "b")])])
    f = tmp_path / "mix.poset"
    f.write_text(write_poset_file("mix", big))
    assert main(["analyze", str(f)]) == 0
    out = capsys.readouterr().out
    assert "cofibrant: VERIFIED" in out
    assert "minima: 2/2 VERIFIED" in out
