from core.reports import CONJECTURE, VerificationReport


def test_status_follows_violations():
    report = VerificationReport("shift", {"n_max": 5})
    assert report.record("shift-equal", {"n": 5, "d": 2, "m": 4}, 1, 1)
    assert report.status == "pass"
    assert not report.record_differs("shift-differs", {"n": 5, "d": 2, "m": 2}, 6, 6)
    assert report.status == "fail"
    assert report.checked == 2
    report.error = "boom"
    assert report.status == "error"


def test_violations_sorted_in_csv():
    report = VerificationReport("shift")
    report.fail("shift-equal", {"n": 7, "d": 1, "m": 0}, 1, 2)
    report.fail("shift-equal", {"n": 5, "d": 3, "m": 1}, 3, 4)
    assert report.render_csv().splitlines() == [
        "check,n,d,m,expected,actual,status",
        "shift-equal,5,3,1,3,4,fail",
        "shift-equal,7,1,0,1,2,fail",
    ]


def test_extra_coordinates_extend_header():
    report = VerificationReport("mixed")
    report.fail("row", {"n": 3, "d": 1}, 1, 2)
    report.fail("perm", {"n": 3, "perm": "213"}, 0, 1)
    assert report.render_csv().splitlines()[0] == "check,n,d,m,perm,expected,actual,status"


def test_merge_and_text():
    total = VerificationReport("conjecture", {"max_k": 1}, severity=CONJECTURE)
    part = VerificationReport("W-recurrence")
    part.record("W-recurrence", {"k": 1, "d": 2}, 4, 4)
    part.notes.append("evidence only")
    total.merge(part)
    text = total.render_text()
    assert text.startswith("conjecture (conjecture) max_k=1\nstatus: pass\nchecked: 1\n")
    assert "note: evidence only" in text


def test_csv_quotes_rendered_words():
    report = VerificationReport("bijection")
    report.fail("inverse", {"n": 10, "perm": "10,2,1"}, "10,2,1", "2,1")
    assert report.render_csv().splitlines() == [
        "check,n,d,m,perm,expected,actual,status",
        'inverse,10,,,"10,2,1","10,2,1","2,1",fail',
    ]
