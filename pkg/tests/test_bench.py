from weylmax import bench


def test_bench_runs_and_reports_backends(capsys):
    assert bench.main(["--type", "B2", "--repeat", "1"]) == 0
    out = capsys.readouterr().out
    assert "pure" in out
    assert "|W|" in out
