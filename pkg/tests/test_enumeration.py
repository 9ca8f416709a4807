import json
import math

import pytest

from revstack.enumeration import (
    CACHE_FORMAT_VERSION,
    cached_descent_table,
    classify_degree_nm2,
    count_zigzag_free,
    degree_nm2_classes,
    descent_table,
    load_reference_tables,
    permutations_with_first,
    reproduce_appendix,
    resolve_cache_dir,
    verify_steingrimsson,
    verify_theorems,
    zigzag_free_table,
)
from revstack.perms import deg_revstack
from revstack.polynomials import (
    IntPoly,
    count_revstack_nm2,
    count_revstack_nm3,
    eulerian_poly,
)


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


class TestDescentTable:
    def test_reference_row(self, get_table):
        table = get_table(5, "revstack")
        assert table.row(2).coeffs == (0, 1, 20, 49, 20, 1)
        assert table.row(0).coeffs == (0, 1)
        assert table.row(4) == eulerian_poly(5)

    def test_counts(self, get_table):
        table = get_table(5, "revstack")
        assert [table.count(t) for t in range(5)] == [1, 42, 91, 116, 120]
        assert table.count(3) == count_revstack_nm2(5)
        assert table.count(2) == count_revstack_nm3(5)

    def test_one_pass_is_catalan(self, get_table):
        for n in range(2, 8):
            assert get_table(n, "revstack").count(1) == catalan(n)
            assert get_table(n, "stack").count(1) == catalan(n)

    def test_row_out_of_range(self, get_table):
        with pytest.raises(ValueError):
            get_table(5, "revstack").row(5)

    def test_json_schema(self, get_table):
        blob = get_table(4, "revstack").to_json()
        assert blob["n"] == 4
        assert blob["sorter"] == "revstack"
        assert [r["t"] for r in blob["rows"]] == [0, 1, 2, 3]
        assert blob["counts"][-1] == 24

    def test_bad_sorter_and_bounds(self):
        with pytest.raises(ValueError):
            descent_table(5, "bubble")
        with pytest.raises(ValueError):
            descent_table(13)
        with pytest.raises(ValueError):
            descent_table(0)

    def test_sharding_partitions(self):
        seen = set()
        for first in range(1, 6):
            shard = list(permutations_with_first(5, first))
            assert all(w[0] == first for w in shard)
            assert len(shard) == 24
            seen.update(shard)
        assert len(seen) == 120

    def test_determinism_across_jobs(self):
        serial = descent_table(6, "revstack", jobs=1)
        for jobs in (2, 4):
            assert descent_table(6, "revstack", jobs=jobs) == serial

    def test_descent_counts_vector(self, get_table):
        t = get_table(5, "revstack")
        assert t.descent_counts(2) == [1, 20, 49, 20, 1]

    def test_n8_row3(self, get_table):
        assert get_table(8, "revstack").row(3).coeffs == (
            0, 1, 154, 2587, 9490, 9490, 2587, 154, 1
        )


class TestCache:
    def test_round_trip(self, tmp_path):
        cold = cached_descent_table(5, "revstack", cache_dir=tmp_path)
        assert (tmp_path / "table-revstack-5.json").exists()
        warm = cached_descent_table(5, "revstack", cache_dir=tmp_path)
        assert warm == cold == descent_table(5, "revstack")

    def test_corrupt_entry_recomputed(self, tmp_path):
        path = tmp_path / "table-revstack-4.json"
        path.write_text("{not json")
        table = cached_descent_table(4, "revstack", cache_dir=tmp_path)
        assert table == descent_table(4, "revstack")
        assert json.loads(path.read_text())["format_version"] == CACHE_FORMAT_VERSION

    def test_version_mismatch_recomputed(self, tmp_path):
        cached_descent_table(4, "revstack", cache_dir=tmp_path)
        path = tmp_path / "table-revstack-4.json"
        blob = json.loads(path.read_text())
        blob["format_version"] = -1
        blob["deg_des"] = [[9] * 4 for _ in range(4)]
        path.write_text(json.dumps(blob))
        table = cached_descent_table(4, "revstack", cache_dir=tmp_path)
        assert table == descent_table(4, "revstack")

    def test_env_var_resolution(self, tmp_path, monkeypatch):
        monkeypatch.setenv("PERMSORT_CACHE_DIR", str(tmp_path / "envcache"))
        assert resolve_cache_dir() == tmp_path / "envcache"
        assert resolve_cache_dir(tmp_path / "flag") == tmp_path / "flag"


class TestSteingrimsson:
    def test_n5(self, get_table):
        report = verify_steingrimsson(
            5, tables=(get_table(5, "revstack"), get_table(5, "stack"))
        )
        assert report.ok
        by_t = {r.t: r for r in report.rows}
        assert by_t[3].stack_count == 114
        assert by_t[3].revstack_count == 116
        assert by_t[3].strict
        assert by_t[4].stack_count == by_t[4].revstack_count == 120
        assert not by_t[4].strict

    def test_n7_strictness_window(self, get_table):
        report = verify_steingrimsson(
            7, tables=(get_table(7, "revstack"), get_table(7, "stack"))
        )
        assert report.ok
        assert [r.t for r in report.rows if r.strict] == [3, 4, 5]

    def test_json(self, get_table):
        blob = verify_steingrimsson(
            4, tables=(get_table(4, "revstack"), get_table(4, "stack"))
        ).to_json()
        assert blob["ok"] is True
        assert len(blob["rows"]) == 4


class TestTheoremSuite:
    def test_degenerate_sizes(self):
        for n in (1, 2):
            report = verify_theorems(n)
            assert report.ok, [c for c in report.checks if not c.ok]

    def test_n5_passes_everything(self):
        report = verify_theorems(5)
        assert report.ok, [c for c in report.checks if not c.ok]
        names = {c.name for c in report.checks}
        assert "zigzag bracketing" in names
        assert "degree-(n-2) root interlacing" in names

    def test_n6_passes_everything(self):
        report = verify_theorems(6)
        assert report.ok, [c for c in report.checks if not c.ok]

    def test_json_shape(self):
        blob = verify_theorems(3).to_json()
        assert blob["ok"] is True
        assert all({"name", "ok"} <= set(c) for c in blob["checks"])


class TestClassification:
    def test_class_families_n4(self):
        report = classify_degree_nm2(4)
        assert report.ok, report.detail
        assert sum(report.sizes.values()) == count_revstack_nm2(4) - count_revstack_nm3(4)

    def test_union_size_n5(self):
        report = classify_degree_nm2(5)
        assert report.ok, report.detail
        assert sum(report.sizes.values()) == 25

    def test_n6(self):
        report = classify_degree_nm2(6)
        assert report.ok, report.detail

    def test_members_have_exact_degree(self):
        for n in (4, 5):
            for spec in degree_nm2_classes(n):
                for w in spec.members():
                    assert deg_revstack(w) == n - 2

    def test_bounds(self):
        with pytest.raises(ValueError):
            classify_degree_nm2(3)
        with pytest.raises(ValueError):
            classify_degree_nm2(11)


class TestZigzagFree:
    def test_zero_degree_counts_identity_only(self):
        for n in range(1, 7):
            assert count_zigzag_free(n, 0) == 1
            assert count_zigzag_free(n, 0, uninterrupted_only=True) == 1

    def test_degree_one_counts_catalan(self):
        for n in range(1, 7):
            assert count_zigzag_free(n, 1) == catalan(n)

    def test_bracketing_counts(self, get_table):
        for n in range(1, 7):
            table = get_table(n, "revstack")
            for k in range(n):
                lo = count_zigzag_free(n, k)
                hi = count_zigzag_free(n, k, uninterrupted_only=True)
                assert lo <= table.count(k) <= hi

    def test_table_matches_single_counts(self):
        rows = zigzag_free_table(5)
        for k, (free, free_u) in rows.items():
            assert free == count_zigzag_free(5, k)
            assert free_u == count_zigzag_free(5, k, uninterrupted_only=True)

    def test_bounds(self):
        with pytest.raises(ValueError):
            count_zigzag_free(11, 1)
        with pytest.raises(ValueError):
            count_zigzag_free(5, -1)


class TestAppendixReproduction:
    def test_reference_data_is_complete(self):
        entries = load_reference_tables()
        assert len(entries) == 55
        assert {(e["n"], e["t"]) for e in entries} == {
            (n, t) for n in range(1, 11) for t in range(n)
        }

    def test_reference_spot_values(self):
        by_key = {(e["n"], e["t"]): e for e in load_reference_tables()}
        assert by_key[(7, 4)]["coeffs"] == [0, 1, 112, 1113, 2258, 1113, 112, 1]
        assert by_key[(10, 1)]["coeffs"][5] == 5292
        assert -471.40751 in by_key[(9, 8)]["roots"]

    def test_all_reference_rows_log_concave(self):
        # the log-concavity conjecture at full reference scale (n <= 10)
        from revstack.polynomials import is_log_concave

        for e in load_reference_tables():
            assert is_log_concave(IntPoly.from_coeffs(e["coeffs"])), (e["n"], e["t"])

    def test_small_scale(self):
        report = reproduce_appendix(enumerate_max_n=6)
        assert report.ok
        assert report.enumerated_n == (1, 2, 3, 4, 5, 6)

    def test_corrupted_coefficient_is_named(self):
        entries = [dict(e) for e in load_reference_tables()]
        victim = next(e for e in entries if e["n"] == 5 and e["t"] == 2)
        victim["coeffs"] = list(victim["coeffs"])
        victim["coeffs"][3] += 1
        report = reproduce_appendix(enumerate_max_n=5, entries=entries)
        assert not report.ok
        assert any(m.n == 5 and m.t == 2 for m in report.mismatches)

    def test_corrupted_root_is_named(self):
        entries = [dict(e) for e in load_reference_tables()]
        victim = next(e for e in entries if e["n"] == 4 and e["t"] == 3)
        victim["roots"] = list(victim["roots"])
        victim["roots"][0] += 0.01
        report = reproduce_appendix(enumerate_max_n=1, entries=entries)
        assert not report.ok
        assert any(m.n == 4 and m.t == 3 and "root" in m.what for m in report.mismatches)
