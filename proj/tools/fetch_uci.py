#!/usr/bin/env python3
"""Prepare the benchmark CSV files under data/uci/.

balance.csv needs no download: the source file is the complete 5^4 factorial
grid over (left-weight, left-distance, right-weight, right-distance) in
{1..5}, labeled by comparing the two torques, so it is synthesized here
bit-for-bit (label in the first column, as distributed).

The remaining datasets are downloaded from the UCI repository (or a stable
mirror for pima, which UCI withdrew) and normalized:
  * identifier columns are dropped,
  * missing numeric cells ("?") are imputed with the column mean unless the
    variant is defined by dropping those rows,
  * categorical boards/genders are mapped to small integers,
  * everything else is kept in file order, label in the last column.

Run from anywhere: paths resolve relative to the repository root.
"""

import csv
import io
import sys
import urllib.request
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "data" / "uci"

UCI = "https://archive.ics.uci.edu/ml/machine-learning-databases"


def write_rows(name, rows):
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    path = OUT_DIR / name
    with open(path, "w", newline="") as fh:
        csv.writer(fh).writerows(rows)
    print(f"wrote {path} ({len(rows)} rows)")


def synthesize_balance():
    rows = []
    for lw in range(1, 6):
        for ld in range(1, 6):
            for rw in range(1, 6):
                for rd in range(1, 6):
                    left, right = lw * ld, rw * rd
                    label = "B" if left == right else ("L" if left > right else "R")
                    rows.append([label, lw, ld, rw, rd])
    write_rows("balance.csv", rows)


def fetch(url):
    with urllib.request.urlopen(url, timeout=60) as resp:
        return resp.read().decode("utf-8", errors="replace")


def rows_of(text):
    return [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]


def impute_mean(rows, columns):
    for c in columns:
        vals = [float(r[c]) for r in rows if r[c] not in ("?", "")]
        mean = sum(vals) / len(vals)
        for r in rows:
            if r[c] in ("?", ""):
                r[c] = f"{mean:.6f}"


def prepare_ionosphere():
    rows = rows_of(fetch(f"{UCI}/ionosphere/ionosphere.data"))
    write_rows("ionosphere.csv", rows)  # 34 features, label g/b last


def prepare_breast_cancer():
    raw = rows_of(fetch(f"{UCI}/breast-cancer-wisconsin/breast-cancer-wisconsin.data"))
    # column 0 is a sample id; column 10 the class (2 benign / 4 malignant)
    trimmed = [r[1:] for r in raw]
    complete = [list(r) for r in trimmed if "?" not in r]
    write_rows("breast_cancer_1.csv", complete)  # 683 rows, variant without missing rows
    imputed = [list(r) for r in trimmed]
    impute_mean(imputed, range(9))
    write_rows("breast_cancer_2.csv", imputed)  # all 699 rows, means fill the gaps


def prepare_pima():
    # withdrawn from UCI; this mirror carries the canonical 768-row file
    url = "https://raw.githubusercontent.com/jbrownlee/Datasets/master/pima-indians-diabetes.data.csv"
    write_rows("pima.csv", rows_of(fetch(url)))


def prepare_tictac():
    rows = rows_of(fetch(f"{UCI}/tic-tac-toe/tic-tac-toe.data"))
    value = {"x": "1", "o": "-1", "b": "0"}
    out = [[value[c] for c in r[:9]] + [r[9]] for r in rows]
    write_rows("tictac.csv", out)


def prepare_ilpd():
    url = f"{UCI}/00225/Indian%20Liver%20Patient%20Dataset%20(ILPD).csv"
    raw = rows_of(fetch(url))
    gender = {"Male": "1", "Female": "0"}
    # ilpd: drop the gender column, impute the handful of missing ratios
    ilpd = [[r[0]] + r[2:] for r in raw]
    impute_mean(ilpd, range(9))
    write_rows("ilpd.csv", ilpd)
    # liver: keep gender as a numeric feature, drop rows with missing cells
    liver = [[r[0], gender[r[1]]] + r[2:] for r in raw if "?" not in r and "" not in r]
    write_rows("liver.csv", liver)


def prepare_bands():
    raw = rows_of(fetch(f"{UCI}/cylinder-bands/bands.data"))
    # keep the numeric measurements (columns 20..39 per bands.names) and the
    # band/noband label; rows with missing measurements are dropped
    out = []
    for r in raw:
        if len(r) < 40:
            continue
        feats = r[20:39]
        label = r[39].strip().lower()
        if "?" in feats or "" in feats or label not in ("band", "noband"):
            continue
        try:
            [float(v) for v in feats]
        except ValueError:
            continue
        out.append(feats + [label])
    write_rows("bands.csv", out)


def main():
    synthesize_balance()
    steps = [
        prepare_ionosphere,
        prepare_breast_cancer,
        prepare_pima,
        prepare_tictac,
        prepare_ilpd,
        prepare_bands,
    ]
    failures = []
    for step in steps:
        try:
            step()
        except Exception as exc:  # noqa: BLE001 - report and keep going
            failures.append(f"{step.__name__}: {exc}")
    if failures:
        print("\nsome downloads failed (balance.csv is always available):",
              file=sys.stderr)
        for f in failures:
            print(f"  {f}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
