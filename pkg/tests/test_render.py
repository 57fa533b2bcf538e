from fractions import Fraction

from hiveforge.oblade import BranchingTriple, enumerate_fillings, is_degenerate
from hiveforge.render import RenderSpec, render_honeycomb, render_oblade

LAM = (3, 4, 3, 5)
MU = (4, 3, 5, 4)


def first_filling(nu):
    return next(enumerate_fillings(BranchingTriple(5, LAM, MU, nu)))


def test_oblade_svg_is_deterministic():
    f = first_filling((7, 9, 8, 3))
    spec = RenderSpec(kind="oblade", show_labels=True, highlight_zero_edges=True)
    a = render_oblade(f, spec)
    b = render_oblade(f, spec)
    assert a == b
    assert a.startswith("<svg") and a.rstrip().endswith("</svg>")


def test_oblade_nondegenerate_has_no_zero_labels():
    f = next(
        f
        for f in enumerate_fillings(BranchingTriple(5, LAM, MU, (2, 2, 4, 2)))
        if not is_degenerate(f)
    )
    doc = render_oblade(f, RenderSpec(kind="oblade", highlight_zero_edges=True))
    assert "dasharray" not in doc  # zero edges would be dashed


def test_oblade_marks_zero_edges():
    f = first_filling((7, 9, 8, 3))
    assert is_degenerate(f)
    doc = render_oblade(f, RenderSpec(kind="oblade", highlight_zero_edges=True))
    assert "dasharray" in doc


def test_all_zero_oblade_renders():
    z = (0, 0, 0, 0)
    f = next(enumerate_fillings(BranchingTriple(5, z, z, z)))
    doc = render_oblade(f, RenderSpec(kind="oblade"))
    assert doc.count(">0</text>") >= 30  # every inner edge labeled 0


def test_honeycomb_deterministic_and_scaled():
    f = first_filling((3, 4, 4, 7))
    spec = RenderSpec(kind="honeycomb", scale=Fraction(30), show_labels=False)
    a = render_honeycomb(f, spec)
    assert a == render_honeycomb(f, spec)
    assert "<line" in a


def test_honeycomb_degenerate_warning():
    z = (0, 0, 0, 0)
    f = next(enumerate_fillings(BranchingTriple(5, z, z, z)))
    doc = render_honeycomb(f, RenderSpec(kind="honeycomb"))
    assert "warning" in doc
