"""Regenerate the webui test fixtures from the live msa-decide API.

The scripted interactions mirror how the UI builds queries: weights carry
only sliders above zero, the context always carries every fact, and facts
start at `unknown` when the served domain offers it (else the first domain
value). Run from this directory after any knowledge-base change:

    python3 generate_fixtures.py
"""

import json
import pathlib
import warnings

warnings.filterwarnings("ignore")

from fastapi.testclient import TestClient

from msa_decide import default_model
from msa_decide.api import create_app

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"

STEPS = [
    ("fact", "team_size", "small_5_to_9"),
    ("weight", "flexibility", 2.0),
    ("weight", "reliability", 1.5),
    ("weight", "portability", 1.0),
    ("fact", "business_understanding", "yes"),
    ("weight", "scalability", 2.0),
    ("weight", "performance", 1.0),
    ("fact", "team_size", "large"),
    ("fact", "team_size", "undefined"),
    ("fact", "legacy_code_available", "yes"),
    ("weight", "reusability", 2.5),
    ("fact", "legacy_code_available", "no"),
    ("fact", "dfds_available", "yes"),
    ("weight", "execution_cost", 1.0),
    ("fact", "team_size", "small_5_to_9"),
    ("fact", "time_for_scenarios", "yes"),
    ("weight", "flexibility", 0.0),
    ("weight", "coupling", 3.0),
    ("fact", "project_scale_large", "yes"),
    ("weight", "security", 0.5),
]


def neutral(domain: list) -> str:
    return "unknown" if "unknown" in domain else domain[0]


def build_request(qa_order, fact_order, weights, facts) -> dict:
    body_weights = {qa: weights[qa] for qa in qa_order if weights[qa] > 0}
    body_context = {fact: facts[fact] for fact in fact_order}
    return {"weights": body_weights, "context": body_context}


def main() -> None:
    client = TestClient(create_app(default_model()))
    model = client.get("/api/v1/model").json()
    matrix = client.get("/api/v1/matrix").json()

    qa_order = [qa["id"] for qa in model["qas"]]
    fact_order = list(model["context_facts"])
    weights = {qa: 0.0 for qa in qa_order}
    facts = {f: neutral(model["context_facts"][f]) for f in fact_order}

    def query() -> tuple:
        request = build_request(qa_order, fact_order, weights, facts)
        response = client.post("/api/v1/recommend", json=request)
        assert response.status_code == 200, response.text
        return request, response.json()

    initial_request, initial_response = query()

    steps = []
    for kind, key, value in STEPS:
        if kind == "weight":
            weights[key] = value
        else:
            facts[key] = value
        request, response = query()
        steps.append(
            {
                "action": {"kind": kind, "key": key, "value": value},
                "request": request,
                "response": response,
            }
        )

    assert len(steps) == 20

    ranked_after_portability = [e["pattern"] for e in steps[3]["response"]["entries"]]
    assert ranked_after_portability[0] == "subdomains", ranked_after_portability

    assert steps[7]["response"]["entries"] == [], "large team should yield no candidates"
    codes = {w["code"] for w in steps[7]["response"]["warnings"]}
    assert "W_NO_CANDIDATES" in codes

    eligible_after_legacy = {e["pattern"] for e in steps[9]["response"]["entries"]}
    assert "graph_based" in eligible_after_legacy

    FIXTURES.mkdir(parents=True, exist_ok=True)
    (FIXTURES / "model.json").write_text(json.dumps(model, indent=1) + "\n")
    (FIXTURES / "matrix.json").write_text(json.dumps(matrix, indent=1) + "\n")
    (FIXTURES / "interactions.json").write_text(
        json.dumps(
            {
                "initial": {"request": initial_request, "response": initial_response},
                "steps": steps,
            },
            indent=1,
        )
        + "\n"
    )
    print(f"wrote fixtures to {FIXTURES}")


if __name__ == "__main__":
    main()
