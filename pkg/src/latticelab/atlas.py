"""Exhaustive catalog of small lattices and the implication grid over it.

Enumeration up to isomorphism runs two ways.  The production generator
grows meet-closed posets one maximal element at a time (a lattice minus
its top is exactly such a poset, and deleting any maximal element of one
leaves another), rejecting isomorphs by canonical form.  The naive oracle
filters all upper-triangular cover sets and exists only to cross-check
the generator at small sizes.
"""

import json
from dataclasses import dataclass
from functools import lru_cache

from .classify import ClassificationRecord, classify
from .errors import AtlasParseError, BoundExceededError
from .lattice import try_lattice
from .poset import (
    canonical_form,
    canonicalize,
    poset_from_canonical,
    poset_from_covers,
)
from .shellability import DEFAULT_EL_BUDGET

PRACTICAL_MAX_N = 10
SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _down_set_extensions(p):
    """Down-sets D of p such that adding a new maximal element above D
    keeps every pairwise meet defined (D cut below any element must have a
    single maximal member)."""
    n = p.n
    down = [frozenset(x for x in range(n) if p.leq[x, a]) for a in range(n)]
    out = []
    for mask in range(1, 1 << n):
        members = frozenset(x for x in range(n) if mask >> x & 1)
        if any(not set(p.lower_covers[x]) <= members for x in members):
            continue  # not down-closed
        ok = True
        for a in range(n):
            cut = members & down[a]
            if not cut:
                ok = False
                break
            maximal = [
                x for x in cut if not any(p.leq[x, y] and x != y for y in cut)
            ]
            if len(maximal) != 1:
                ok = False
                break
        if ok:
            out.append(members)
    return out


def _extend_with_maximal(p, members):
    "p plus one new maximal element whose strict down-set is `members`."
    n = p.n
    maximal = [
        x for x in members if not any(p.leq[x, y] and x != y for y in members)
    ]
    covers = list(p.covers) + [(x, n) for x in sorted(maximal)]
    return poset_from_covers(n + 1, covers)


@lru_cache(maxsize=None)
def _meet_closed_posets(k):
    "All k-element meet-closed posets up to isomorphism, canonically labeled."
    if k < 1:
        return ()
    if k == 1:
        return (poset_from_covers(1, []),)
    found = {}
    for p in _meet_closed_posets(k - 1):
        for members in _down_set_extensions(p):
            q = canonicalize(_extend_with_maximal(p, members))
            found.setdefault(canonical_form(q), q)
    return tuple(found[f] for f in sorted(found))


def enumerate_lattices(n):
    """All isomorphism classes of n-element lattices, canonically labeled,
    sorted by canonical form.  Every class appears exactly once."""
    if n < 1:
        raise BoundExceededError(f"n must be at least 1, got {n}")
    if n > PRACTICAL_MAX_N:
        raise BoundExceededError(
            f"enumeration supports n <= {PRACTICAL_MAX_N}, got {n}"
        )
    if n == 1:
        return [try_lattice(poset_from_covers(1, []))]
    out = []
    for p in _meet_closed_posets(n - 1):
        maximal = [
            x
            for x in range(p.n)
            if not any(p.leq[x, y] and x != y for y in range(p.n))
        ]
        covers = list(p.covers) + [(x, p.n) for x in sorted(maximal)]
        poset = canonicalize(poset_from_covers(n, covers))
        out.append((canonical_form(poset), poset))
    out.sort(key=lambda item: item[0])
    forms = [f for f, _ in out]
    if len(set(forms)) != len(forms):
        raise AssertionError("duplicate isomorphism class in enumeration")
    return [try_lattice(p) for _, p in out]


def enumerate_lattices_naive(n, max_n_guard=6):
    """Cross-check oracle: filter every upper-triangular cover set.

    Any poset can be labeled along a linear extension, so scanning cover
    sets with lower < upper hits every isomorphism class.  Exponential in
    n(n-1)/2; guarded to small n.
    """
    if n < 1:
        raise BoundExceededError(f"n must be at least 1, got {n}")
    if n > max_n_guard:
        raise BoundExceededError(
            f"naive enumeration is capped at n <= {max_n_guard}"
        )
    slots = [(a, b) for a in range(n) for b in range(a + 1, n)]
    found = {}
    for mask in range(1 << len(slots)):
        covers = [slots[i] for i in range(len(slots)) if mask >> i & 1]
        try:
            p = poset_from_covers(n, covers)
            try_lattice(p)
        except Exception:
            continue
        found.setdefault(canonical_form(p), canonicalize(p))
    return [try_lattice(found[f]) for f in sorted(found)]


# ---------------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AtlasEntry:
    n: int
    canonical: bytes
    record: ClassificationRecord

    def as_json_line(self):
        obj = {
            "canonical": self.canonical.hex(),
            "n": self.n,
            "record": self.record.as_json(),
        }
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj):
        return cls(
            n=obj["n"],
            canonical=bytes.fromhex(obj["canonical"]),
            record=ClassificationRecord.from_json(obj["record"]),
        )


def entry_lattice(entry):
    "Rebuild the lattice an entry describes (canonical labels)."
    return try_lattice(poset_from_canonical(entry.canonical))


def build_atlas(max_n, el_budget=DEFAULT_EL_BUDGET, out_path=None, progress=None):
    """Classify every lattice with up to max_n elements.

    Entries come out sorted by (n, canonical form), so runs with equal
    parameters produce identical files.  With out_path the entries stream
    to disk as they are produced.
    """
    entries = []
    sink = open(out_path, "w", encoding="utf-8") if out_path else None
    try:
        if sink:
            sink.write(_header_line(max_n, el_budget) + "\n")
        for n in range(1, max_n + 1):
            for L in enumerate_lattices(n):
                entry = AtlasEntry(
                    n=n,
                    canonical=canonical_form(L.poset),
                    record=classify(L, el_budget=el_budget),
                )
                entries.append(entry)
                if sink:
                    sink.write(entry.as_json_line() + "\n")
            if progress:
                progress(n, len(entries))
    finally:
        if sink:
            sink.close()
    return entries


def _header_line(max_n, el_budget):
    return json.dumps(
        {"schema": SCHEMA_VERSION, "max_n": max_n, "el_budget": el_budget},
        sort_keys=True,
        separators=(",", ":"),
    )


def write_atlas(path, entries, max_n=None, el_budget=DEFAULT_EL_BUDGET, append=False):
    """Write entries as one JSON object per line under a schema header.

    append=True merges into an existing file, skipping entries whose
    canonical form is already present; the result is re-sorted so the file
    stays deterministic.
    """
    entries = list(entries)
    if max_n is None:
        max_n = max((e.n for e in entries), default=0)
    if append:
        try:
            _, existing = read_atlas(path)
        except FileNotFoundError:
            existing = []
        present = {e.canonical for e in existing}
        entries = existing + [e for e in entries if e.canonical not in present]
        max_n = max([max_n] + [e.n for e in entries])
    entries.sort(key=lambda e: (e.n, e.canonical))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_header_line(max_n, el_budget) + "\n")
        for entry in entries:
            fh.write(entry.as_json_line() + "\n")
    return entries


def read_atlas(path):
    "Parse an atlas file; returns (header, entries)."
    header = None
    entries = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise AtlasParseError(lineno, f"bad JSON: {exc}") from exc
            if lineno == 1:
                if obj.get("schema") != SCHEMA_VERSION:
                    raise AtlasParseError(
                        lineno, f"unsupported schema {obj.get('schema')!r}"
                    )
                header = obj
                continue
            try:
                entries.append(AtlasEntry.from_json_obj(obj))
            except (KeyError, ValueError) as exc:
                raise AtlasParseError(lineno, f"bad entry: {exc!r}") from exc
    if header is None:
        raise AtlasParseError(1, "missing schema header")
    return header, entries


CSV_COLUMNS = (
    "n", "canonical", "distributive", "jsd", "msd", "sd",
    "join_extremal", "extremal", "left_modular", "el", "lenL", "J", "M",
)


def write_csv(path, entries):
    "Flat per-lattice summary with a stable column order."
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(",".join(CSV_COLUMNS) + "\n")
        for e in sorted(entries, key=lambda e: (e.n, e.canonical)):
            r = e.record
            row = [
                str(e.n),
                e.canonical.hex(),
                str(int(r.distributive)),
                str(int(r.join_semidistributive)),
                str(int(r.meet_semidistributive)),
                str(int(r.semidistributive)),
                str(int(r.join_extremal)),
                str(int(r.extremal)),
                str(int(r.left_modular)),
                r.el_shellable,
                str(r.length),
                str(r.num_join_irreducibles),
                str(r.num_meet_irreducibles),
            ]
            fh.write(",".join(row) + "\n")


# ---------------------------------------------------------------------------
# The implication grid
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Arrow:
    """One arrow of the property grid.

    expected is "holds" (must scan clean), "refuted" (a counterexample is
    known) or "open" (scanned and reported, never asserted).  designated
    names the zoo lattice the literature offers as the refuting example.
    """

    arrow_id: str
    premises: tuple
    conclusion: str
    expected: str
    designated: str | None = None


ARROWS = (
    # row: all lattices
    Arrow("extremal=>join_extremal", ("extremal",), "join_extremal", "holds"),
    Arrow("join_extremal=>extremal", ("join_extremal",), "extremal",
          "refuted", "left_modular_not_semidistributive"),
    Arrow("join_extremal=>left_modular", ("join_extremal",), "left_modular",
          "refuted", "jsd_not_left_modular"),
    Arrow("left_modular=>join_extremal", ("left_modular",), "join_extremal",
          "refuted", "m3"),
    Arrow("left_modular=>el_shellable", ("left_modular",), "el_shellable",
          "holds"),
    Arrow("el_shellable=>left_modular", ("el_shellable",), "left_modular",
          "refuted", "jsd_not_left_modular"),
    # row: join-semidistributive lattices
    Arrow("jsd&extremal=>join_extremal",
          ("join_semidistributive", "extremal"), "join_extremal", "holds"),
    Arrow("jsd&join_extremal=>extremal",
          ("join_semidistributive", "join_extremal"), "extremal",
          "refuted", "left_modular_not_semidistributive"),
    Arrow("jsd&join_extremal=>left_modular",
          ("join_semidistributive", "join_extremal"), "left_modular",
          "refuted", "jsd_not_left_modular"),
    Arrow("jsd&left_modular=>join_extremal",
          ("join_semidistributive", "left_modular"), "join_extremal",
          "holds"),
    Arrow("jsd&left_modular=>el_shellable",
          ("join_semidistributive", "left_modular"), "el_shellable", "holds"),
    Arrow("jsd&el_shellable=>left_modular",
          ("join_semidistributive", "el_shellable"), "left_modular",
          "refuted", "jsd_not_left_modular"),
    # row: semidistributive lattices
    Arrow("sd&extremal=>join_extremal",
          ("semidistributive", "extremal"), "join_extremal", "holds"),
    Arrow("sd&join_extremal=>extremal",
          ("semidistributive", "join_extremal"), "extremal", "holds"),
    Arrow("sd&join_extremal=>left_modular",
          ("semidistributive", "join_extremal"), "left_modular", "holds"),
    Arrow("sd&left_modular=>join_extremal",
          ("semidistributive", "left_modular"), "join_extremal", "holds"),
    Arrow("sd&left_modular=>el_shellable",
          ("semidistributive", "left_modular"), "el_shellable", "holds"),
    Arrow("sd&el_shellable=>left_modular",
          ("semidistributive", "el_shellable"), "left_modular", "open"),
    Arrow("sd&el_shellable=>extremal",
          ("semidistributive", "el_shellable"), "extremal", "open"),
    # columns: does the column property force the row hypothesis?
    Arrow("extremal=>jsd", ("extremal",), "join_semidistributive",
          "refuted", "extremal_not_left_modular"),
    Arrow("join_extremal=>jsd", ("join_extremal",), "join_semidistributive",
          "refuted", "extremal_not_left_modular"),
    Arrow("left_modular=>jsd", ("left_modular",), "join_semidistributive",
          "refuted", "m3"),
    Arrow("el_shellable=>jsd", ("el_shellable",), "join_semidistributive",
          "refuted", "m3"),
    Arrow("jsd&extremal=>sd", ("join_semidistributive", "extremal"),
          "semidistributive", "holds"),
    Arrow("jsd&join_extremal=>sd",
          ("join_semidistributive", "join_extremal"), "semidistributive",
          "refuted", "left_modular_not_semidistributive"),
    Arrow("jsd&left_modular=>sd",
          ("join_semidistributive", "left_modular"), "semidistributive",
          "refuted", "left_modular_not_semidistributive"),
    Arrow("jsd&el_shellable=>sd",
          ("join_semidistributive", "el_shellable"), "semidistributive",
          "refuted", "left_modular_not_semidistributive"),
)


@dataclass(frozen=True)
class ArrowResult:
    arrow: Arrow
    violations: int
    counterexamples: tuple  # canonical forms, at most a handful kept
    skipped_unknown_el: int
    designated_found: bool | None

    @property
    def ok(self):
        if self.arrow.expected == "holds":
            return self.violations == 0
        return True  # refuted/open arrows never fail the scan


@dataclass(frozen=True)
class ImplicationReport:
    results: tuple
    max_n: int

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    def summary_lines(self):
        lines = []
        for r in self.results:
            arrow = r.arrow
            if arrow.expected == "holds":
                state = "holds" if r.violations == 0 else "VIOLATED"
            elif arrow.expected == "open":
                state = f"open ({r.violations} candidates)"
            else:
                state = (
                    f"refuted ({r.violations} counterexamples)"
                    if r.violations
                    else "no counterexample in range"
                )
            extra = ""
            if arrow.designated:
                mark = {True: "found", False: "MISSING", None: "out of range"}[
                    r.designated_found
                ]
                extra = f"  [designated {arrow.designated}: {mark}]"
            if r.skipped_unknown_el:
                extra += f"  [{r.skipped_unknown_el} skipped: EL unknown]"
            lines.append(
                f"{arrow.arrow_id:45s} expected {arrow.expected:8s} -> "
                f"{state}{extra}"
            )
        return lines


def _zoo_canonical_forms():
    from . import zoo

    names = (
        "m3",
        "hexagon",
        "extremal_not_left_modular",
        "left_modular_not_semidistributive",
        "jsd_not_left_modular",
    )
    return {
        name: canonical_form(getattr(zoo, name)().poset) for name in names
    }


def check_implications(entries, keep_examples=5):
    """Scan every grid arrow against a set of classified entries.

    Arrows expected to hold must have zero violations; refuted arrows
    report the counterexamples found (the designated zoo witness must be
    among them whenever its size is in range).  Entries with unknown
    shellability are skipped for arrows that mention it.
    """
    entries = list(entries)
    max_n = max((e.n for e in entries), default=0)
    designated_forms = _zoo_canonical_forms()
    results = []
    for arrow in ARROWS:
        needs_el = "el_shellable" in arrow.premises + (arrow.conclusion,)
        violations = 0
        examples = []
        skipped = 0
        for entry in entries:
            record = entry.record
            if needs_el and record.el_shellable == "unknown":
                skipped += 1
                continue
            if not all(record.flag(p) for p in arrow.premises):
                continue
            if record.flag(arrow.conclusion):
                continue
            violations += 1
            if len(examples) < keep_examples:
                examples.append(entry.canonical)
        designated_found = None
        if arrow.designated:
            form = designated_forms[arrow.designated]
            size = int.from_bytes(form[:4], "big")
            if size <= max_n:
                designated_found = any(
                    e.canonical == form
                    and all(e.record.flag(p) for p in arrow.premises)
                    and not e.record.flag(arrow.conclusion)
                    for e in entries
                )
        results.append(
            ArrowResult(arrow, violations, tuple(examples), skipped, designated_found)
        )
    return ImplicationReport(tuple(results), max_n)


# ---------------------------------------------------------------------------
# Question hunts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HuntReport:
    """Counterexample candidates for the two open questions.

    Both questions quantify over semidistributive EL-shellable lattices:
    the first asks whether such a lattice can avoid being left modular,
    the second whether it can avoid being extremal.  The report only lists
    findings up to the scanned size; it never claims an answer.
    """

    not_left_modular: tuple
    not_extremal: tuple
    unknown_el: tuple
    scanned: dict

    def summary_lines(self):
        lines = [
            f"scanned: {sum(self.scanned.values())} lattices "
            f"({', '.join(f'n={n}: {c}' for n, c in sorted(self.scanned.items()))})",
            f"semidistributive, EL-shellable, not left modular: "
            f"{len(self.not_left_modular)}",
            f"semidistributive, EL-shellable, not extremal: "
            f"{len(self.not_extremal)}",
            f"semidistributive with undecided EL status: {len(self.unknown_el)}",
        ]
        for entry in self.not_left_modular:
            lines.append(f"  candidate (not left modular): n={entry.n} "
                         f"{entry.canonical.hex()}")
        for entry in self.not_extremal:
            lines.append(f"  candidate (not extremal): n={entry.n} "
                         f"{entry.canonical.hex()}")
        for entry in self.unknown_el:
            lines.append(f"  undecided: n={entry.n} {entry.canonical.hex()}")
        return lines


def hunt_questions(entries):
    entries = list(entries)
    scanned = {}
    not_lm = []
    not_ext = []
    unknown = []
    for entry in entries:
        scanned[entry.n] = scanned.get(entry.n, 0) + 1
        record = entry.record
        if not record.semidistributive:
            continue
        if record.el_shellable == "unknown":
            unknown.append(entry)
            continue
        if record.el_shellable != "yes":
            continue
        if not record.left_modular:
            not_lm.append(entry)
        if not record.extremal:
            not_ext.append(entry)
    key = lambda e: (e.n, e.canonical)
    return HuntReport(
        tuple(sorted(not_lm, key=key)),
        tuple(sorted(not_ext, key=key)),
        tuple(sorted(unknown, key=key)),
        scanned,
    )
