"""Structured-gossip CHORD simulator."""

import json

from ._sgossip import ControlService as _ControlService
from ._sgossip import run_scenario as _run_scenario

__all__ = ["ApiError", "Network", "run_scenario"]


class ApiError(Exception):
    def __init__(self, status, body):
        super().__init__(f"{status}: {body.get('error')} ({body.get('field')})")
        self.status = status
        self.field = body.get("field")


class Network:
    """In-process client for the control API."""

    def __init__(self, n, **options):
        self._svc = _ControlService()
        self.network_id = self._call("POST", "/network", dict(n=n, **options))["network_id"]

    def _call(self, method, path, body=None, query=None):
        status, text, content_type = self._svc.handle(
            method, path, json.dumps(body) if body is not None else "", query or {})
        if content_type == "application/x-ndjson":
            return [json.loads(line) for line in text.splitlines()]
        parsed = json.loads(text)
        if status >= 400:
            raise ApiError(status, parsed)
        return parsed

    def split(self, fragments):
        return self._call("POST", "/split", {"fragments": fragments})["partition_ids"]

    def heal(self, partitions="all"):
        self._call("POST", "/heal", {"partitions": partitions})

    def step(self, rounds=1):
        return self._call("POST", "/step", {"rounds": rounds})["metrics"]

    def publish(self, node, name, ip, ttl):
        return self._call("POST", "/publish", dict(node=node, name=name, ip=ip, ttl=ttl))

    def lookup(self, origin, name):
        return self._call("POST", "/lookup", dict(origin=origin, name=name))

    def state(self):
        return self._call("GET", "/state")

    def events(self, since=0):
        return self._call("GET", "/events", query={"since": str(since)})


def run_scenario(scenario):
    """Runs a scenario (dict or JSON text) to completion."""
    text = scenario if isinstance(scenario, str) else json.dumps(scenario)
    out = _run_scenario(text)
    return {
        "summary": json.loads(out["summary"]),
        "events": [json.loads(line) for line in out["events"]],
        "metrics_csv": out["metrics_csv"],
    }
