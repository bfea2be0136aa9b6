import pathlib

import pytest

from noetherpairs.cli import JobParseError, JobSpec, main, run_text

GOLDEN = pathlib.Path(__file__).parent / "golden"
JOBS = sorted(GOLDEN.glob("*.job"))


@pytest.mark.parametrize("job", JOBS, ids=lambda p: p.stem)
def test_golden(job):
    assert run_text(job.read_text()) == job.with_suffix(".out").read_text()


def test_every_command_has_a_golden_job():
    from noetherpairs.cli import COMMANDS
    used = {JobSpec.parse(p.read_text()).command for p in JOBS if not p.stem.startswith("error")}
    assert used == set(COMMANDS)


def test_jobspec_round_trip():
    text = "command: groebner\noption order: lex\nring: x, y\npoly: x^2 - y\n"
    job = JobSpec.parse(text)
    assert JobSpec.parse(job.to_text()) == job
    assert job.option("order") == "lex" and job.option("seed") == "0"


def test_parse_error_position():
    with pytest.raises(JobParseError) as exc:
        JobSpec.parse("command: groebner\nring x\n")
    assert (exc.value.line, exc.value.col) == (2, 1)


def run_main(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_main_hilbert_polynomial(capsys, monkeypatch):
    code, out, _ = run_main(capsys, ["hilbert", "--polynomial"], "ring: x0, x1\npoly: x1\n",
                            monkeypatch)
    assert code == 0 and out == "Q(d) = 1\n"


def test_main_hilbscheme(capsys):
    code, out, _ = run_main(capsys, ["hilbscheme", "--n", "1", "--Q", "1"])
    assert code == 0
    assert "d0 = 1\n" in out and "N0 = 1\n" in out
    assert "ambient = Gr_1(F^2) in P^1\n" in out and "scheme equations = 0\n" in out


def test_main_pair_rank(capsys):
    code, out, _ = run_main(capsys, ["pair", "rank", "a=t"])
    assert code == 0 and "rm = ω\n" in out


def test_main_kv_output(capsys):
    code, out, _ = run_main(capsys, ["pair", "rank", "a=e", "--out", "kv"])
    assert code == 0 and "rm=1\n" in out


def test_main_semantic_error(capsys, tmp_path):
    job = tmp_path / "bad.job"
    job.write_text("eta: 1, 0, 0, 0, 0, 1\ngrade: 2\ndim: 4\n")
    code, out, err = run_main(capsys, ["plucker", str(job)])
    assert code == 1 and out == "" and "not decomposable" in err


def test_main_usage_error(capsys, tmp_path):
    job = tmp_path / "bad.job"
    job.write_text("ring: x\npoly: x +\n")
    code, _, err = run_main(capsys, ["groebner", str(job)])
    assert code == 2 and "parse error" in err
    code, _, err = run_main(capsys, ["groebner", str(tmp_path / "missing.job")])
    assert code == 2


def test_show_job(capsys):
    code, out, _ = run_main(capsys, ["gotzmann", "--Q", "3*d + 1", "--show-job"])
    assert code == 0 and out == "command: gotzmann\noption Q: 3*d + 1\n"


def test_flags_override_file_options(capsys, tmp_path):
    job = tmp_path / "g.job"
    job.write_text("option order: lex\nring: x, y\npoly: x + y\n")
    _, out, _ = run_main(capsys, ["groebner", str(job), "--order", "grevlex"])
    assert out.startswith("order = grevlex\n")
