import xml.etree.ElementTree as ET

import pytest

from catconv.errors import DomainError
from catconv.paths import parse_path
from catconv.render import render_decomposition, render_triangle
from catconv.triangle import triangle

NS = "{http://www.w3.org/2000/svg}"


def parse(svg):
    return ET.fromstring(svg.split("\n", 1)[1])


def texts(root):
    return [el.text for el in root.iter(NS + "text")]


def test_chi_rendering_two_excursions():
    root = parse(render_decomposition(parse_path("UUDDDDUU"), "chi"))
    assert root.get("version") == "1.1"
    lines = root.findall(f".//{NS}polyline")
    assert len(lines) == 2
    assert len({pl.get("stroke") for pl in lines}) == 2
    legend = texts(root)
    assert any(t.startswith("1. +(UD)") and "above" in t for t in legend)
    assert any(t.startswith("2. -(UD)") and "below" in t for t in legend)
    # intercepts 0, 4, 8 marked
    assert len(root.findall(f".//{NS}circle")) == 3


def test_chi_rendering_empty_path():
    root = parse(render_decomposition(parse_path(""), "chi"))
    assert root.findall(f".//{NS}polyline") == []
    assert len(root.findall(f".//{NS}circle")) == 1


def test_psi_rendering_annotates_split():
    root = parse(render_decomposition(parse_path("UDUD"), "psi"))
    legend = texts(root)
    # split of UDUD: L is empty, R = UD is emitted with sign +
    assert any(t.startswith("1. +(UD)") and "right part" in t for t in legend)
    assert "image UUDD" in legend


def test_render_rejects_bad_input():
    with pytest.raises(DomainError):
        render_decomposition(parse_path("UD"), "psi")
    with pytest.raises(DomainError):
        render_decomposition(parse_path("UU"), "chi")
    with pytest.raises(DomainError):
        render_decomposition(parse_path("UD"), "theorem9")


def test_render_is_deterministic():
    p = parse_path("UUDUDDUDDUUD")
    assert render_decomposition(p, "chi") == render_decomposition(p, "chi")
    assert render_triangle(3) == render_triangle(3)


def test_triangle_rendering_labels():
    root = parse(render_triangle(1))
    labels = texts(root)
    g = triangle(1).to_json()
    assert labels == [v for row in g["rows"] for v in row["labels"].values()]
    # (2,0) is the only forbidden node up to column 4
    struck = [el for el in root.iter(NS + "line") if el.get("stroke") == "#d62728"]
    assert len(struck) == 1


def test_triangle_rendering_omit_and_origin():
    root = parse(render_triangle(0))
    assert texts(root) == ["1"]
    omitted = parse(render_triangle(1, omit_forbidden=True))
    assert len(texts(omitted)) == len(texts(parse(render_triangle(1)))) - 1
