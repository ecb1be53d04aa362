import pytest

from YM_Beta.errors import BetaError, ParseError, StructuralError
from YM_Beta.lie import (
    builtin_algebra, builtin_representation, casimir_adjoint, lie_factor_matter, load_algebra,
    load_representation, parse_document, save_document, serialize, validate,
)

SU2_EPS = """\
# su(2) with epsilon structure constants
kind = algebra
name = su2-eps
dim = 3
f[1][2][3] = 1
f[2][1][3] = -1
f[2][3][1] = 1
f[3][2][1] = -1
f[3][1][2] = 1
f[1][3][2] = -1
kappa[1][1] = 1
kappa[2][2] = 1
kappa[3][3] = 1
"""


class TestParse:
    def test_algebra(self):
        L = parse_document(SU2_EPS)
        assert L.dim == 3 and L.name == "su2-eps"
        assert validate(L) == []
        assert casimir_adjoint(L) == 2

    def test_unknown_key_reports_line(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_document("kind = algebra\ncolour = red\n")

    def test_wrong_arity(self):
        with pytest.raises(ParseError, match="takes 3 indices"):
            parse_document("kind = algebra\ndim = 3\nf[1][2] = 1\n")

    def test_duplicate_entry(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse_document("kind = algebra\ndim = 1\nkappa[1][1] = 1\nkappa[1][1] = 2\n")

    def test_missing_kind(self):
        with pytest.raises(ParseError, match="kind"):
            parse_document("dim = 3\n")

    def test_algebra_with_mu(self):
        with pytest.raises(ParseError, match="cannot carry"):
            parse_document("kind = algebra\ndim = 1\nkappa[1][1] = 1\nmu[1][1] = 1\n")

    def test_representation_needs_dimV(self):
        with pytest.raises(ParseError, match="dimV"):
            parse_document("kind = representation\ndim = 3\n")

    def test_entry_out_of_range(self):
        with pytest.raises(StructuralError):
            parse_document("kind = algebra\ndim = 1\nkappa[2][2] = 1\n")


class TestSerialize:
    def test_algebra_text_is_stable(self):
        L = builtin_algebra("su2").data
        text = serialize(L)
        assert serialize(parse_document(text)) == text

    def test_complex_representation_survives(self, su2):
        rep = builtin_representation(su2, "fund+conj")
        again = parse_document(serialize(rep))
        assert again.dimV == 4
        assert validate(again, su2.data) == []
        assert lie_factor_matter(su2.data, again) == lie_factor_matter(su2.data, rep)


class TestFiles:
    def test_save_and_load(self, tmp_path, su2):
        alg_path = tmp_path / "su2.alg"
        rep_path = tmp_path / "adj.rep"
        save_document(su2.data, alg_path)
        save_document(builtin_representation(su2, "adjoint"), rep_path)
        L = load_algebra(alg_path)
        R = load_representation(rep_path)
        assert casimir_adjoint(L) == 8
        assert lie_factor_matter(L, R) == 8

    def test_kind_mismatch(self, tmp_path, su2):
        path = tmp_path / "su2.alg"
        save_document(su2.data, path)
        with pytest.raises(StructuralError, match="expected a representation"):
            load_representation(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(BetaError, match="cannot read"):
            load_algebra(tmp_path / "absent.alg")

    def test_parse_error_names_file(self, tmp_path):
        path = tmp_path / "broken.alg"
        path.write_text("kind = algebra\n???\n")
        with pytest.raises(ParseError, match="broken.alg"):
            load_algebra(path)
