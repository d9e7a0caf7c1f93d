import pytest

import silverbig as sb
from silverbig import files


def test_design_round_trip(tmp_path, sts13c):
    path = tmp_path / "d.blk"
    files.write_design(sts13c, path)
    assert files.read_design(path) == sts13c


def test_resolved_design_round_trip(tmp_path, kts15):
    path = tmp_path / "k.blk"
    files.write_design(kts15, path)
    back = files.read_design(path)
    assert back == kts15
    assert back.resolution == kts15.resolution


def test_kts27_file_has_13_class_sections(tmp_path):
    d = sb.make_kts(27)
    path = tmp_path / "kts27.blk"
    files.write_design(d, path)
    text = path.read_text()
    assert text.count("%class") == 13
    assert text.splitlines()[0] == "v=27 k=3 lambda=1"
    assert sum(1 for ln in text.splitlines() if ln and ln[0].isdigit()) == 117
    assert files.read_design(path) == d


def test_design_reader_canonicalizes(tmp_path):
    path = tmp_path / "d.blk"
    path.write_text(
        "# a comment\n"
        "v=7 k=3 lambda=1\n"
        "6 4 1\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n2 3 6  # trailing comment\n"
        "2 4 5\n"
    )
    d = files.read_design(path)
    assert d.blocks[0] == (0, 1, 2)
    assert (1, 4, 6) in d.blocks
    assert sb.verify_design(d).ok


def test_design_reader_errors(tmp_path):
    bad_header = tmp_path / "a.blk"
    bad_header.write_text("v=7 k=3\n0 1 2\n")
    with pytest.raises(files.FormatError):
        files.read_design(bad_header)
    bad_block = tmp_path / "b.blk"
    bad_block.write_text("v=7 k=3 lambda=1\n0 1 x\n")
    with pytest.raises(files.FormatError):
        files.read_design(bad_block)
    out_of_range = tmp_path / "c.blk"
    out_of_range.write_text("v=7 k=3 lambda=1\n0 1 9\n")
    with pytest.raises(files.FormatError):
        files.read_design(out_of_range)
    missing = tmp_path / "d.blk"
    missing.write_text("# nothing\n")
    with pytest.raises(files.FormatError):
        files.read_design(missing)
    stray = tmp_path / "e.blk"
    stray.write_text("v=9 k=3 lambda=1\n0 1 2\n%class 0\n3 4 5\n")
    with pytest.raises(files.FormatError):
        files.read_design(stray)


def test_graph_round_trip(tmp_path, sts13c):
    g = sb.build_big(sts13c, 0)
    path = tmp_path / "g.graph"
    files.write_graph(g, path)
    assert path.read_text().splitlines()[0] == f"p 26 {g.edge_count()}"
    assert files.read_graph(path) == g


def test_graph_edgeless_round_trip(tmp_path):
    g = sb.Graph(5)
    path = tmp_path / "g.graph"
    files.write_graph(g, path)
    assert files.read_graph(path) == g


def test_graph_reader_errors(tmp_path):
    path = tmp_path / "g.graph"
    path.write_text("e 0 1\n")
    with pytest.raises(files.FormatError):
        files.read_graph(path)
    path.write_text("p 3 2\ne 0 1\n")
    with pytest.raises(files.FormatError):
        files.read_graph(path)  # declared 2 edges, found 1
    path.write_text("p 3 1\ne 0 3\n")
    with pytest.raises(files.FormatError):
        files.read_graph(path)


def test_coloring_round_trip(tmp_path, kts27_product):
    path = tmp_path / "c.txt"
    files.write_coloring(kts27_product.coloring, path)
    assert path.read_text().splitlines()[0] == "c 37"
    assert files.read_coloring(path) == kts27_product.coloring


def test_coloring_reader_errors(tmp_path):
    path = tmp_path / "c.txt"
    path.write_text("c 3\n0 0\n2 1\n")
    with pytest.raises(files.FormatError):
        files.read_coloring(path)  # vertex 1 missing
    path.write_text("c 2\n0 0\n1 5\n")
    with pytest.raises(files.FormatError):
        files.read_coloring(path)  # color out of range
    path.write_text("0 0\n")
    with pytest.raises(files.FormatError):
        files.read_coloring(path)


def test_alpha_set_round_trip(tmp_path):
    ind = sb.IndependentSet((2, 5, 9))
    path = tmp_path / "a.txt"
    files.write_alpha_set(ind, path)
    assert path.read_text() == "2 5 9\n"
    assert files.read_alpha_set(path) == ind


def test_all_formats_bit_exact(tmp_path, kts27_product):
    """Write-read-write produces identical bytes."""
    d = kts27_product.design
    g = sb.build_big(d, 1)
    for obj, writer, reader, name in [
        (d, files.write_design, files.read_design, "d.blk"),
        (g, files.write_graph, files.read_graph, "g.graph"),
        (kts27_product.coloring, files.write_coloring, files.read_coloring, "c.txt"),
        (kts27_product.alpha_set, files.write_alpha_set, files.read_alpha_set, "a.txt"),
    ]:
        p1, p2 = tmp_path / name, tmp_path / ("again_" + name)
        writer(obj, p1)
        writer(reader(p1), p2)
        assert p1.read_bytes() == p2.read_bytes()
