#!/usr/bin/env python3
"""Record live service responses as test fixtures for the explorer UI.

Run from the repository root after changing the service or the fixtures:

    python frontend/scripts/record_fixtures.py

Uses the in-process ASGI test client, so no server needs to be running.
"""
import json
import subprocess
import sys
from pathlib import Path

from fastapi.testclient import TestClient

from gradarg.document import load_fixture, serialize_graph
from gradarg.service import create_app

TARGET = Path(__file__).resolve().parent.parent / "test" / "fixtures"

DIR3 = {"semantics": "dir", "damping": {"policy": "fixed", "value": 3}}
DIR2 = {"semantics": "dir", "damping": {"policy": "fixed", "value": 2}}


def write(name: str, payload) -> None:
    (TARGET / name).write_text(json.dumps(payload, indent=2) + "\n")
    print(f"wrote {name}")


def main() -> None:
    TARGET.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app())

    write("semantics.json", client.get("/semantics").json())

    school = client.post("/graphs", json=load_fixture("school").to_dict()).json()
    write("school-stored.json", school)
    gid = school["id"]
    write("school-eval-dir3.json",
          client.post(f"/graphs/{gid}/evaluate", json=DIR3).json())
    patched = client.patch(f"/graphs/{gid}/weights", json={
        "weights": {"Miller": 0.0}, "evaluate": DIR3}).json()
    write("school-patch-miller-zero.json", patched)

    # a fresh CLI evaluation of the patched document, full precision records
    patched_doc = json.dumps(patched["graph"])
    doc_path = TARGET / "school-patched-document.json"
    doc_path.write_text(patched_doc + "\n")
    cli = subprocess.run(
        [sys.executable, "-m", "gradarg.cli", "eval",
         "--graph", str(doc_path), "--semantics", "dir",
         "--damping", "3", "--format", "records"],
        capture_output=True, text=True, check=True)
    write("school-patched-cli.json", json.loads(cli.stdout))

    sa = client.post("/graphs", json=load_fixture("self-attack").to_dict()).json()
    write("self-attack-stored.json", sa)
    write("self-attack-dir1.json",
          client.post(f"/graphs/{sa['id']}/evaluate",
                      json={"semantics": "dir",
                            "damping": {"policy": "fixed", "value": 1}}).json())

    liverpool = client.post("/graphs", json=load_fixture("liverpool").to_dict()).json()
    write("liverpool-stored.json", liverpool)
    lid = liverpool["id"]
    write("liverpool-eval-dir2.json",
          client.post(f"/graphs/{lid}/evaluate", json=DIR2).json())
    write("liverpool-remove-bpi-wlm.json",
          client.patch(f"/graphs/{lid}/edges", json={
              "edit": {"action": "remove", "from": "bpi", "to": "wlm"},
              "evaluate": DIR2}).json())


if __name__ == "__main__":
    main()
