#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
fermatmoduli — MCP Server

Exposes the command-line runner (run.py) as Model Context Protocol tools so
MCP clients can compute genera, orbit types, cone-point symmetries and lifts,
classify curves and run the theorem suites.

Each tool shells out to `python run.py <command> --output json` in a
subprocess, so the server and the CLI share one code path and one set of
exit codes.

Usage (stdio transport):
    python mcp_server.py

Client registration example (.mcp.json):
    {
      "mcpServers": {
        "fermatmoduli": {
          "command": "<venv python>",
          "args": ["<project>/mcp_server.py"]
        }
      }
    }
"""

from __future__ import annotations

import asyncio
import sys
from pathlib import Path
from typing import Literal

from mcp.server.fastmcp import FastMCP

PROJECT_ROOT = Path(__file__).resolve().parent
RUN_PY = PROJECT_ROOT / "run.py"

MAX_OUTPUT_CHARS = 20_000

DEFAULT_TIMEOUT_S = 600
LONG_TIMEOUT_S = 3600

mcp = FastMCP(
    "fermatmoduli",
    instructions=(
        "Tools for generalized Fermat curves x_1^k + x_2^k + x_3^k = 0, "
        "lambda_j x_1^k + x_2^k + x_{j+3}^k = 0. Complex numbers are literals "
        "such as '-2+1.4142i'; 'inf' is the point at infinity; permutations use "
        "1-based cycle notation like '(1 2)(3 4)'. classify and verify scan k^n "
        "lifts per symmetry and may be slow for large k or n."
    ),
)


def _tail(output: str) -> str:
    if len(output) > MAX_OUTPUT_CHARS:
        return f"[output truncated to the last {MAX_OUTPUT_CHARS} characters]\n" + output[-MAX_OUTPUT_CHARS:]
    return output


async def _run_cli(cli_args: list[str], timeout_seconds: float) -> str:
    """Run `python run.py <cli_args> --output json`; return exit code and output."""
    if not RUN_PY.exists():
        return f"error: run.py not found at {RUN_PY}"

    args = [*cli_args, "--output", "json"]
    proc = await asyncio.create_subprocess_exec(
        sys.executable,
        str(RUN_PY),
        *args,
        cwd=str(PROJECT_ROOT),
        stdout=asyncio.subprocess.PIPE,
        stderr=asyncio.subprocess.PIPE,
    )
    try:
        out, err = await asyncio.wait_for(proc.communicate(), timeout=timeout_seconds)
    except asyncio.TimeoutError:
        proc.kill()
        await proc.wait()
        return (
            f"error: command timed out after {timeout_seconds:.0f}s and was killed: "
            f"run.py {' '.join(args)}. Re-run with a larger timeout_seconds."
        )

    status = "ok" if proc.returncode == 0 else "failed"
    text = f"status={status} exit_code={proc.returncode}\ncommand=run.py {' '.join(args)}\n\n"
    text += _tail(out.decode("utf-8", errors="replace"))
    stderr = err.decode("utf-8", errors="replace").strip()
    if stderr:
        text += "\n\n[stderr]\n" + _tail(stderr)
    return text


def _epsilon(args: list[str], epsilon: float | None) -> list[str]:
    return args + (["--epsilon", repr(epsilon)] if epsilon is not None else [])


@mcp.tool()
async def genus(k: int, n: int, timeout_seconds: float = DEFAULT_TIMEOUT_S) -> str:
    """Genus of a generalized Fermat curve of type (k, n)."""
    return await _run_cli(["genus", "--k", str(k), "--n", str(n)], timeout_seconds)


@mcp.tool()
async def orbit_types(n: int, max_N: int | None = None, timeout_seconds: float = DEFAULT_TIMEOUT_S) -> str:
    """All (N, A, B, C) with n+1 = 2NA + NB + 2C for anticonformal symmetries."""
    args = ["orbit-types", "--n", str(n)]
    if max_N is not None:
        args += ["--max-N", str(max_N)]
    return await _run_cli(args, timeout_seconds)


@mcp.tool()
async def symmetries(
    points: list[str] | None = None,
    orientation: Literal["conformal", "anticonformal", "both"] = "both",
    epsilon: float | None = None,
    points_file: str | None = None,
    timeout_seconds: float = DEFAULT_TIMEOUT_S,
) -> str:
    """Extended Möbius symmetries of a cone-point configuration, given either as
    points=["inf", "0", "1", "-6", "-2+1.4142i", "2-1.4142i"] or as a JSON
    points_file {"points": [...]}."""
    if (points is None) == (points_file is None):
        raise ValueError("pass exactly one of points or points_file")
    source = [f"--points={','.join(points)}"] if points is not None else ["--points-file", points_file]
    args = [*source, "--orientation", orientation]
    return await _run_cli(_epsilon(["symmetries", *args], epsilon), timeout_seconds)


@mcp.tool()
async def lift(
    curve_path: str,
    perm: str,
    anticonformal: bool = False,
    epsilon: float | None = None,
    timeout_seconds: float = DEFAULT_TIMEOUT_S,
) -> str:
    """Lift the cone-point symmetry inducing `perm` (cycle notation) to the
    curve stored in `curve_path` (JSON with k and lambdas)."""
    args = ["lift", "--curve", curve_path, "--perm", perm]
    if anticonformal:
        args.append("--anticonformal")
    return await _run_cli(_epsilon(args, epsilon), timeout_seconds)


@mcp.tool()
async def classify(
    curve_path: str,
    workers: int = 1,
    epsilon: float | None = None,
    timeout_seconds: float = LONG_TIMEOUT_S,
) -> str:
    """Decide whether the field of moduli is R and whether the curve is real."""
    args = ["classify", "--curve", curve_path, "--workers", str(workers)]
    return await _run_cli(_epsilon(args, epsilon), timeout_seconds)


@mcp.tool()
async def verify(
    suite: Literal["theorem1", "humbert", "hidalgo", "p5", "prime-even"],
    k: int | None = None,
    n: int | None = None,
    workers: int = 1,
    timeout_seconds: float = LONG_TIMEOUT_S,
) -> str:
    """Check a reality theorem on its prescribed configurations. Exit code 4
    means a check failed."""
    args = ["verify", "--suite", suite, "--workers", str(workers)]
    if k is not None:
        args += ["--k", str(k)]
    if n is not None:
        args += ["--n", str(n)]
    return await _run_cli(args, timeout_seconds)


if __name__ == "__main__":
    mcp.run()
