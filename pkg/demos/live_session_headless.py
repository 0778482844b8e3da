"""A complete operator session without a browser.

Boots the websocket service on a random port, drives it with a scripted
client that nudges the team right, then down-left, lets the run finish at
50x real time, and finally proves the saved session record replays
bit-for-bit through the deterministic simulator. This is the same loop the
cockpit UI speaks; the client here is ~30 lines of plain JSON frames.
"""

from __future__ import annotations

import asyncio
import json
import tempfile
from pathlib import Path

from websockets.asyncio.client import connect

from wavesync.scenario import bundled
from wavesync.session import SessionConfig, serve_async
from wavesync.simulator import run
from wavesync.operators import ReplayOperator


async def drive(port: int) -> dict:
    last_state = {}
    async with connect(f"ws://127.0.0.1:{port}") as ws:
        async def send(obj):
            await ws.send(json.dumps(obj))

        await send({"v": 1, "type": "cmd", "u": [0.8, 0.0]})
        await send({"type": "start"})
        async for raw in ws:
            frame = json.loads(raw)
            if frame["type"] == "state":
                last_state = frame
                if frame["t"] > 10.0:
                    await send({"v": 1, "type": "cmd", "u": [-0.4, -0.4],
                                "t": frame["t"]})
            elif frame["type"] == "end":
                break
    return last_state


async def main() -> None:
    sc = bundled("delayed").replace(duration=20.0)
    record = Path(tempfile.mkdtemp()) / "session.json"
    config = SessionConfig(scenario=sc, port=0, record_path=record, speed=50.0)

    server = await serve_async(config)
    try:
        last = await drive(server.port)
    finally:
        await server.close()

    print(f"last state frame : t = {last['t']:.2f}s, z = {last['z']}")

    payload = json.loads(record.read_text())
    print(f"record           : {payload['steps']} steps, "
          f"{len(payload['commands'])} operator commands")

    # replay the recorded inputs through the batch simulator
    sc_rec = bundled("delayed").replace(duration=payload["scenario"]["duration"])
    op = ReplayOperator(payload["u_applied"], sc_rec.dt)
    log = run(sc_rec, operator=op)
    ok = log.sha256() == payload["trajectory_sha256"]
    print(f"replay verified  : {'MATCH' if ok else 'MISMATCH'} "
          f"({payload['trajectory_sha256'][:16]}...)")


if __name__ == "__main__":
    asyncio.run(main())
