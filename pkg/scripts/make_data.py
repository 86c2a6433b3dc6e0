"""Regenerate the sample files in data/ from the example catalog.

Run from the repository root:  python3 scripts/make_data.py
"""

import json
import os
import sys

from hopfkit import cli

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")

EMITS = [
    ("group-z2.json", "group-algebra", {"n": 2}),
    ("quasi-kZ2-twisted.json", "quasi-kZ2-twisted", {}),
    ("sweedler.json", "sweedler", {}),
    ("groupoid-3.json", "groupoid", {"objects": 3}),
    ("groupoid-3-regular.json", "groupoid-regular", {"objects": 3}),
    ("graded-yd-algebra.json", "graded-yd-algebra", {}),
    ("smash-bicomodule-kZ2.json", "smash-bicomodule", {}),
    ("smash-bicomodule-sweedler.json", "smash-bicomodule", {"hopf": "H4"}),
    ("exterior-3.json", "exterior", {"k": 3}),
    ("plain-regular-bicomodule.json", "plain-regular-bicomodule", {}),
    ("braided-smash-bicomodule.json", "braided-smash-bicomodule", {}),
]


def emit(fname, name, params):
    argv = ["examples", "emit", name, "--out", os.path.join(OUT, fname)]
    for k, v in params.items():
        argv += ["--param", f"{k}={json.dumps(v)}"]
    rc = cli.main(argv)
    if rc:
        sys.exit(rc)


def main():
    os.makedirs(OUT, exist_ok=True)
    for fname, name, params in EMITS:
        emit(fname, name, params)
    # Hopf algebra files for structure-theorem runs
    for fname in ("groupoid-3-regular.json", "smash-bicomodule-kZ2.json",
                  "smash-bicomodule-sweedler.json", "plain-regular-bicomodule.json",
                  "braided-smash-bicomodule.json"):
        with open(os.path.join(OUT, fname)) as fh:
            doc = json.load(fh)
        cli.write_json(os.path.join(OUT, fname.replace(".json", "-H.json")), doc["over"])
    # an associator whose stated inverse is wrong
    with open(os.path.join(OUT, "quasi-kZ2-twisted.json")) as fh:
        doc = json.load(fh)
    doc["name"] = "broken associator inverse"
    doc["tensors"]["phi_inv"][0][0][0] = "2"
    cli.write_json(os.path.join(OUT, "bad-phi-inverse.json"), doc)


if __name__ == "__main__":
    main()
