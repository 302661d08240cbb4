from streamcalc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_prints_prefix_and_closed_form(capsys):
    code, out, _ = run(capsys, "eval", "1/(1-3*X)", "--n", "6")
    assert code == 0
    assert out == "1, 3, 9, 27, 81, 243\n(1)/(1 - 3*X)\n"


def test_eval_in_prime_field(capsys):
    code, out, _ = run(capsys, "eval", "1/(1-3*X)", "--n", "4", "--field", "gf:7")
    assert code == 0
    assert out.splitlines()[0] == "1, 3, 2, 6"


def test_derive(capsys):
    code, out, _ = run(capsys, "derive", "1/(1-X)^2", "--k", "1")
    assert (code, out) == (0, "(2 - X)/(1 - 2*X + X^2)\n")
    code, out, _ = run(capsys, "derive", "1/(1-X)^2", "--k", "2")
    assert (code, out) == (0, "(3 - 2*X)/(1 - 2*X + X^2)\n")


def test_realize_writes_system_file(capsys):
    code, out, _ = run(capsys, "realize", "1/(1-2*X)", "1/(1-X)^2")
    assert code == 0
    assert out == (
        "field q\nn 3\nm 2\nF 0,0,2;1,0,-5;0,1,4\nH 1,2,4;1,2,3\nv0 1,0,0\n"
    )


def test_circuit_synth_and_sim(tmp_path, capsys):
    code, out, _ = run(capsys, "circuit", "synth", "1/(1-X)^2")
    assert code == 0
    assert out == "field=q\nM=0,-1;1,2\nN=1,2\nr=1,0\n"
    path = tmp_path / "naturals.circuit"
    path.write_text(out)
    code, out, _ = run(capsys, "circuit", "sim", "--file", str(path), "--n", "6")
    assert (code, out) == (0, "1, 2, 3, 4, 5, 6\n")


def test_circuit_sim_accepts_netlists(tmp_path, capsys):
    from streamcalc import format_netlist, parse_canonical

    circuit = parse_canonical("M=0,-1;1,2\nN=1,2\nr=1,0\n")
    path = tmp_path / "naturals.netlist"
    path.write_text(format_netlist(circuit.to_netlist()))
    code, out, _ = run(capsys, "circuit", "sim", "--file", str(path), "--n", "4")
    assert (code, out) == (0, "1, 2, 3, 4\n")


def test_automaton_synth_and_eval(tmp_path, capsys):
    code, out, _ = run(capsys, "automaton", "synth", "1/(1-X)^2")
    assert code == 0
    assert out == (
        "field q\nstates 2\nout 1 1\nout 2 2\nedge 1 2 1\nedge 2 1 -1\nedge 2 2 2\n"
    )
    path = tmp_path / "naturals.automaton"
    path.write_text(out)
    for method in ("path", "closed"):
        code, out, _ = run(
            capsys, "automaton", "eval", "--file", str(path),
            "--state", "2", "--n", "4", "--method", method,
        )
        assert (code, out) == (0, "2, 3, 4, 5\n")


def test_equal_across_files(tmp_path, capsys):
    run(capsys, "circuit", "synth", "1/(1-X)^2")
    circuit_text = "field=q\nM=0,-1;1,2\nN=1,2\nr=1,0\n"
    circuit_path = tmp_path / "c.txt"
    circuit_path.write_text(circuit_text)
    code, out, _ = run(
        capsys, "equal", f"circuit:{circuit_path}", "expr:1/(1-X)^2"
    )
    assert (code, out) == (0, "equal\n")

    system_path = tmp_path / "s.txt"
    code, out, _ = run(capsys, "realize", "1/(1-X)^2")
    system_path.write_text(out)
    capsys.readouterr()
    code, out, _ = run(
        capsys, "equal", f"system:{system_path}", f"circuit:{circuit_path}"
    )
    assert (code, out) == (0, "equal\n")


def test_equal_reports_distinguishing_index(capsys):
    code, out, _ = run(capsys, "equal", "expr:1/(1-X)", "expr:1/(1-2*X)")
    assert code == 0
    assert out == "not-equal\ndiffers-at 1\n"


def test_equal_system_with_state_override(tmp_path, capsys):
    system_path = tmp_path / "s.txt"
    code, out, _ = run(capsys, "realize", "1/(1-X)^2")
    system_path.write_text(out)
    capsys.readouterr()
    code, out, _ = run(
        capsys, "equal", f"system:{system_path}@0,1", "expr:(2-X)/(1-X)^2"
    )
    assert (code, out) == (0, "equal\n")


def test_rank_report(capsys):
    code, out, _ = run(capsys, "rank", "--expr", "1/(1-X)^2", "--m", "10")
    assert code == 0
    assert out == "prefix_len: 19\nhankel_size: 10\nrank: 2\n"
    code, out, _ = run(capsys, "rank", "--prefix", "1,1,1,1,1", "--m", "3")
    assert code == 0
    assert out.endswith("rank: 1\n")


def test_probe_reports(capsys):
    code, out, _ = run(capsys, "probe", "--expr", "1/(1-X)^2", "--d", "5")
    assert code == 0
    assert out == (
        "prefix_len: 11\nhankel_size: 6\nrank: 2\nverdict: RationalWitnessConsistent\n"
    )


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "eval", "1/X", "--n", "3")
    assert code == 1
    assert "no inverse" in err


def test_syntax_error_exit_code(capsys):
    code, _, err = run(capsys, "eval", "1/((1-X)", "--n", "3")
    assert code == 2
    assert "offset" in err


def test_format_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.system"
    bad.write_text("field q\nn 2\nm 1\nF 0,-1\nH 1,2\n")
    code, _, err = run(capsys, "equal", f"system:{bad}@1,0", "expr:1")
    assert code == 2


def test_usage_error_exit_code(capsys):
    assert main(["eval"]) == 2
    capsys.readouterr()


def test_missing_file_exit_code(capsys):
    code, _, err = run(capsys, "circuit", "sim", "--file", "/nonexistent", "--n", "3")
    assert code == 2


def test_field_mismatch_is_domain_error(tmp_path, capsys):
    system_path = tmp_path / "s.txt"
    code, out, _ = run(capsys, "realize", "1/(1-X)")
    system_path.write_text(out)
    capsys.readouterr()
    code, _, err = run(
        capsys, "equal", f"system:{system_path}", "expr:1/(1-X)", "--field", "gf:7"
    )
    assert code == 1
