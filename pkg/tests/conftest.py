"""Shared session fixtures and the acceptance report hook.

The expensive enumerations (r=4 subgroups, the full lift pipeline, the
independent closure recount) are computed once per session and shared by
whichever tests request them.  Acceptance tests append one line each to
the report list; the terminal summary prints them together so a full run
ends with a PASS/FAIL line per criterion.
"""

import pytest

from codegroups import embedding, regular

THREADS = 4


@pytest.fixture(scope="session")
def subs2():
    return regular.enumerate_regular(2)


@pytest.fixture(scope="session")
def subs3():
    return regular.enumerate_regular(3)


@pytest.fixture(scope="session")
def subs4():
    return regular.enumerate_regular(4, threads=THREADS)


@pytest.fixture(scope="session")
def classes2(subs2):
    return regular.conjugacy_classes(subs2, 2)


@pytest.fixture(scope="session")
def classes3(subs3):
    return regular.conjugacy_classes(subs3, 3)


@pytest.fixture(scope="session")
def classes4(subs4):
    return regular.conjugacy_classes(subs4, 4)


@pytest.fixture(scope="session")
def iso4(classes4):
    return regular.isomorphism_classes(
        [cl.representative for cl in classes4])


@pytest.fixture(scope="session")
def lifts3_by_parent(classes3):
    out = {}
    for cl in classes3:
        out[cl.class_id] = embedding.lift_regular(
            cl.representative, parent_class_id=cl.class_id)
    return out


@pytest.fixture(scope="session")
def lifts3(lifts3_by_parent):
    flat = []
    for pid in sorted(lifts3_by_parent):
        flat.extend(lifts3_by_parent[pid])
    return flat


@pytest.fixture(scope="session")
def partition3(lifts3):
    return embedding.classify_lifts_conjugacy(lifts3)


@pytest.fixture(scope="session")
def lifts4_by_parent(classes4):
    out = {}
    for cl in classes4:
        out[cl.class_id] = embedding.lift_regular(
            cl.representative, parent_class_id=cl.class_id)
    return out


@pytest.fixture(scope="session")
def lifts4(lifts4_by_parent):
    flat = []
    for pid in sorted(lifts4_by_parent):
        flat.extend(lifts4_by_parent[pid])
    return flat


@pytest.fixture(scope="session")
def partition4(lifts4):
    return embedding.classify_lifts_conjugacy(lifts4)


@pytest.fixture(scope="session")
def fingerprints4(lifts4, partition4):
    reps = [lifts4[p[0]] for p in partition4]
    return embedding.classify_lifts_fingerprint(reps)


@pytest.fixture(scope="session")
def closure_count4():
    return regular.count_regular_by_closure(4)


@pytest.fixture(scope="session")
def ac_report():
    return []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_ac_lines", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines):
        terminalreporter.write_line(line)


@pytest.fixture(autouse=True, scope="session")
def _publish_ac(request, ac_report):
    yield
    request.config._ac_lines = list(ac_report)
