import pytest
from hypothesis import given, strategies as st

from kclosure.catalog import catalog, compute_tags, get
from kclosure.cycles import (GroupSpec, emit_cycles, emit_spec, load_spec, parse_cycles,
                             parse_spec, save_spec)
from kclosure.errors import CycleSyntaxError
from kclosure.perm import Permutation
from kclosure.structure import is_nilpotent


class TestParseCycles:
    def test_two_cycles(self):
        assert parse_cycles("(1 2 3)(4 5 6)", 6).images == (1, 2, 0, 4, 5, 3)

    def test_identity(self):
        assert parse_cycles("()", 4) == Permutation.identity(4)

    def test_whitespace_between_cycles(self):
        assert parse_cycles(" (1 2)  (3 4) ", 4) == parse_cycles("(1 2)(3 4)", 4)

    @pytest.mark.parametrize("text", ["(1 1 2)", "(1 2)(2 3)"])
    def test_repeated_point(self, text):
        with pytest.raises(CycleSyntaxError, match="repeated"):
            parse_cycles(text, 3)

    @pytest.mark.parametrize("text", ["(0 1)", "(1 4)"])
    def test_out_of_range(self, text):
        with pytest.raises(CycleSyntaxError, match="out of range"):
            parse_cycles(text, 3)

    @pytest.mark.parametrize("text", ["", "1 2", "(1 2", "(1,2)", "(a b)"])
    def test_syntax(self, text):
        with pytest.raises(CycleSyntaxError):
            parse_cycles(text, 3)

    @given(st.integers(1, 9).flatmap(lambda n: st.permutations(range(n))))
    def test_emit_round_trip(self, images):
        p = Permutation(images)
        assert parse_cycles(emit_cycles(p), p.degree) == p


class TestSpecFormat:
    def test_parse(self):
        spec = parse_spec("# comment\ndegree 6\nname C6\ngen (1 2 3 4 5 6)  # rotation\n")
        assert spec == GroupSpec("C6", 6, ("(1 2 3 4 5 6)",))
        assert spec.group().order() == 6

    def test_trailing_fixed_points(self):
        spec = parse_spec("degree 5\ngen (1 2)\n")
        assert spec.group().degree == 5

    @pytest.mark.parametrize("text", ["gen (1 2)\ndegree 2\n", "degree x\n", "",
                                      "degree 2\ndegree 3\n", "degree 2\nfoo bar\n",
                                      "degree 2\ngen (1 3)\n"])
    def test_errors(self, text):
        with pytest.raises(CycleSyntaxError):
            parse_spec(text)

    @pytest.mark.parametrize("entry", catalog(), ids=[e.name for e in catalog()])
    def test_round_trip(self, entry):
        assert parse_spec(emit_spec(entry.spec)) == entry.spec

    def test_file_round_trip(self, tmp_path):
        spec = get("Q8-regular").spec
        save_spec(spec, tmp_path / "q8.group")
        assert load_spec(tmp_path / "q8.group") == spec

    def test_name_defaults_to_file_stem(self, tmp_path):
        (tmp_path / "mine.group").write_text("degree 3\ngen (1 2 3)\n")
        assert load_spec(tmp_path / "mine.group").name == "mine"


class TestCatalog:
    def test_required_entries_present(self):
        names = {e.name for e in catalog()}
        for required in ["C2-regular", "C3-regular", "C4-regular", "C5-regular", "C6-regular",
                         "C8-regular", "C12-regular", "E4-regular", "C2^3", "C3-diagonal",
                         "Q8-regular", "D4-natural", "C2wrC2-regular", "C2xC3-product",
                         "Q8+C3-sum", "S3-natural", "D5-natural", "trivial-1", "trivial-4"]:
            assert required in names

    def test_c6(self):
        e = get("C6-regular")
        assert e.spec.degree == 6 and e.spec.generators == ("(1 2 3 4 5 6)",)
        assert e.tags == {"nilpotent", "abelian", "transitive", "regular"}

    def test_s3_negative(self):
        assert "non-nilpotent" in get("S3-natural").tags

    def test_q8(self):
        e = get("Q8-regular")
        G = e.group()
        elements = G.elements()
        assert len(elements) == 8
        assert e.tags == {"nilpotent", "p-group", "transitive", "regular"}
        # one involution, six elements of order 4: the quaternion group
        assert sorted(g.order() for g in elements) == [1, 2, 4, 4, 4, 4, 4, 4]

    def test_wreath_is_dihedral_regular(self):
        G = get("C2wrC2-regular").group()
        assert sorted(g.order() for g in G.elements()) == [1, 2, 2, 2, 2, 2, 4, 4]

    @pytest.mark.parametrize("entry", catalog(), ids=[e.name for e in catalog()])
    def test_tags_consistent(self, entry):
        G = entry.group()
        assert compute_tags(G) == entry.tags
        assert ("nilpotent" in entry.tags) == is_nilpotent(G)

    def test_unknown(self):
        with pytest.raises(KeyError):
            get("nope")
