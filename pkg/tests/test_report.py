from statistics import fmean

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sswbench.netsim import build_topology, run
from sswbench.observation import reference_reading
from sswbench.payload import EncodingId
from sswbench.report import (
    CSV_HEADER,
    SimConfig,
    SweepResult,
    SweepRow,
    emit_csv,
    emit_plotdata,
    parse_csv,
    sweep,
)

SMALL = SimConfig(rounds=3)

rows = st.builds(
    SweepRow,
    n=st.integers(1, 1000),
    encoding=st.sampled_from(list(EncodingId)),
    seed=st.integers(0, 10**6),
    total_tx_kb=st.floats(min_value=0, allow_nan=False, allow_infinity=False),
    lifetime_rounds=st.none() | st.integers(0, 10**6),
    energy_spent_j=st.floats(min_value=0, allow_nan=False, allow_infinity=False),
)


class TestSweep:
    def test_pair_on_same_topology(self):
        res = sweep([10], ["ssw", "es3n"], [1], SMALL)
        assert [(r.n, r.encoding, r.seed) for r in res.rows] == [(10, EncodingId.SSW, 1), (10, EncodingId.ES3N, 1)]
        ssw, es3n = res.rows
        assert es3n.total_tx_kb > ssw.total_tx_kb
        topo = build_topology(10, SMALL.side_for(10), SMALL.radio_range, 1)
        m = run(topo, EncodingId.ES3N, reference_reading(), 3)
        assert es3n.total_tx_kb == m.total_tx_bytes / 1000

    def test_empty_encodings(self):
        with pytest.raises(ValueError):
            sweep([10], [], [1], SMALL)

    def test_empty_n_or_seeds(self):
        with pytest.raises(ValueError):
            sweep([], ["ssw"], [1], SMALL)
        with pytest.raises(ValueError):
            sweep([10], ["ssw"], [], SMALL)

    def test_deterministic(self):
        assert sweep([10, 20], ["ssw", "es3n"], [1, 2], SMALL) == sweep([10, 20], ["ssw", "es3n"], [1, 2], SMALL)

    def test_parallel_matches_serial(self):
        par = SimConfig(rounds=3, workers=2)
        assert sweep([10, 20], ["es3n", "ssw"], [2, 1], par).rows == sweep([10, 20], ["ssw", "es3n"], [1, 2], SMALL).rows

    def test_failed_cell_does_not_abort(self):
        cfg = SimConfig(rounds=1, radio_range=0.5, field_side=1000.0)
        res = sweep([1, 4], ["ssw"], [1], cfg)
        assert res.failures and all("radio range" in f.message for f in res.failures)

    def test_fixed_density(self):
        assert SimConfig().side_for(50) == pytest.approx(200.0)
        assert SimConfig(field_side=90.0).side_for(50) == 90.0


class TestEmit:
    def test_csv_lines(self):
        res = sweep([10], ["ssw", "es3n"], [1], SMALL)
        lines = emit_csv(res).splitlines()
        assert len(lines) == 3
        assert lines[0] == ",".join(CSV_HEADER) == "n,encoding,seed,total_tx_kb,lifetime_rounds,energy_spent_j"

    def test_empty(self):
        with pytest.raises(ValueError):
            emit_csv(SweepResult())
        with pytest.raises(ValueError):
            emit_plotdata(SweepResult())

    @given(st.lists(rows, min_size=1, max_size=20))
    def test_csv_round_trip(self, rs):
        res = SweepResult(rs)
        assert parse_csv(emit_csv(res)).rows == rs

    def test_plotdata_means(self):
        res = SweepResult([
            SweepRow(10, EncodingId.SSW, s, kb, None, 0.1) for s, kb in enumerate([1.0, 2.0, 4.0, 8.0, 10.0])
        ] + [
            SweepRow(10, EncodingId.ES3N, s, kb, None, 0.1) for s, kb in enumerate([3.0, 3.5, 4.0, 4.5, 5.0])
        ] + [SweepRow(20, EncodingId.SSW, 1, 7.0, 3, 0.1), SweepRow(20, EncodingId.ES3N, 1, 9.5, 2, 0.1)])
        lines = emit_plotdata(res).splitlines()
        assert lines[1] == "# n SSW ES3N"
        # hand means: (1+2+4+8+10)/5 = 5, (3+3.5+4+4.5+5)/5 = 4
        assert lines[2:] == ["10 5.0 4.0", "20 7.0 9.5"]
        assert res.means()[(10, EncodingId.SSW)] == fmean([1.0, 2.0, 4.0, 8.0, 10.0])
