"""Run configuration, JSON file schemas, provenance snapshots and tolerance linear algebra."""
