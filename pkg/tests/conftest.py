from hypothesis import strategies as st


def ud_strings(max_size=16):
    return st.text(alphabet="UD", max_size=max_size)


@st.composite
def balanced_strings(draw, max_parameter=10):
    n = draw(st.integers(0, max_parameter))
    return "".join(draw(st.permutations("U" * n + "D" * n)))


def fold_to_dyck(s: str) -> str:
    """Reflect the negative parts of a balanced path up; the result is Dyck."""
    out = []
    h = 0
    for ch in s:
        nh = h + (1 if ch == "U" else -1)
        out.append("U" if abs(nh) > abs(h) else "D")
        h = nh
    return "".join(out)


@st.composite
def dyck_strings(draw, max_parameter=10, even=False):
    s = draw(balanced_strings(max_parameter))
    d = fold_to_dyck(s)
    if even and (len(d) // 2) % 2:
        d = "UD" + d
    return d


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
