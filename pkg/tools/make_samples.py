#!/usr/bin/env python3
"""Generate the bundled 2k-line labeled samples under data/samples/.

The public benchmark's labeled 2k subsets cannot be redistributed here, so
these files are deterministic facsimiles: for each dataset a transcribed
set of event templates with realistic value pools, occurrence weights, and
header fields. Every line is written twice, as a raw log line and as a
labeled CSV row (LineId, Content, EventId, EventTemplate), with the label
authored from the template definition, never from any parser output.

Run from the repository root:  python tools/make_samples.py
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

ROOT = Path(__file__).resolve().parents[1]
SAMPLES = ROOT / "data" / "samples"
LINES_PER_DATASET = 2000

DAYS = ["Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"]
MONTHS = ["Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"]


@dataclass(frozen=True)
class Event:
    event_id: str
    template: str
    weight: int
    make: Callable[[random.Random], str]


def ip(rng: random.Random) -> str:
    return f"{rng.randint(10, 250)}.{rng.randint(0, 255)}.{rng.randint(0, 255)}.{rng.randint(1, 254)}"


def block_id(rng: random.Random) -> str:
    sign = "-" if rng.random() < 0.5 else ""
    return f"blk_{sign}{rng.randint(10**17, 9 * 10**18)}"


def session_id(rng: random.Random) -> str:
    return "0x" + "".join(rng.choice("0123456789abcdef") for _ in range(15))


def port(rng: random.Random) -> int:
    return rng.randint(32768, 61000)


class Clock:
    """Monotone second counter rendered by a dataset-specific formatter."""

    def __init__(self, start: int, max_step: int):
        self.seconds = start
        self.max_step = max_step

    def tick(self, rng: random.Random) -> int:
        self.seconds += rng.randint(0, self.max_step)
        return self.seconds

    @staticmethod
    def hms(seconds: int) -> tuple[int, int, int]:
        day_seconds = seconds % 86400
        return day_seconds // 3600, (day_seconds % 3600) // 60, day_seconds % 60


# ---------------------------------------------------------------- HDFS ----

def hdfs_events() -> list[Event]:
    sizes = [67108864] * 9 + [91178]

    def size(rng):
        pick = rng.choice(sizes)
        return pick if pick != 91178 else rng.randint(1024, 67108863)

    return [
        Event("E1", "PacketResponder <*> for block <*> terminating", 340,
              lambda r: f"PacketResponder {r.choice([0, 1, 1, 2, 2, 2, 3])} for block {block_id(r)} terminating"),
        Event("E2", "BLOCK* NameSystem.addStoredBlock: blockMap updated: <*> is added to <*> size <*>", 310,
              lambda r: f"BLOCK* NameSystem.addStoredBlock: blockMap updated: {ip(r)}:50010 "
                        f"is added to {block_id(r)} size {size(r)}"),
        Event("E3", "Receiving block <*> src: <*> dest: <*>", 290,
              lambda r: f"Receiving block {block_id(r)} src: /{ip(r)}:{port(r)} dest: /{ip(r)}:50010"),
        Event("E4", "Received block <*> src: <*> dest: <*> of size <*>", 180,
              lambda r: f"Received block {block_id(r)} src: /{ip(r)}:{port(r)} dest: /{ip(r)}:50010 "
                        f"of size {size(r)}"),
        Event("E5", "Received block <*> of size <*> from <*>", 250,
              lambda r: f"Received block {block_id(r)} of size {size(r)} from /{ip(r)}"),
        Event("E6", "PacketResponder <*> for block <*> Interrupted.", 85,
              lambda r: f"PacketResponder {r.choice([0, 1, 2, 2, 3])} for block {block_id(r)} Interrupted."),
        Event("E7", "Verification succeeded for <*>", 120,
              lambda r: f"Verification succeeded for {block_id(r)}"),
        Event("E8", "Served block <*> to <*>", 130,
              lambda r: f"Served block {block_id(r)} to /{ip(r)}"),
        Event("E9", "Got exception while serving <*> to <*>", 25,
              lambda r: f"Got exception while serving {block_id(r)} to /{ip(r)}:{port(r)}"),
        Event("E10", "Deleting block <*> file <*>", 95,
              lambda r: (lambda b: f"Deleting block {b} file /mnt/hadoop/dfs/data/current/{b}")(block_id(r))),
        Event("E11", "BLOCK* NameSystem.delete: <*> is added to invalidSet of <*>", 80,
              lambda r: f"BLOCK* NameSystem.delete: {block_id(r)} is added to invalidSet of {ip(r)}:50010"),
        Event("E12", "BLOCK* NameSystem.allocateBlock: <*> <*>", 55,
              lambda r: f"BLOCK* NameSystem.allocateBlock: /user/root/rand/_temporary/"
                        f"_task_200811092030_0001_m_{r.randint(0, 1999):06d}_0/part-{r.randint(0, 999):05d}. "
                        f"{block_id(r)}"),
        Event("E13", "Starting thread to transfer block <*> to <*>", 20,
              lambda r: f"Starting thread to transfer block {block_id(r)} to {ip(r)}:50010"),
        Event("E14", "Unexpected error trying to delete block <*> BlockInfo not found in volumeMap.", 8,
              lambda r: f"Unexpected error trying to delete block {block_id(r)}. "
                        f"BlockInfo not found in volumeMap."),
        Event("E15", "writeBlock <*> received exception <*>", 12,
              lambda r: f"writeBlock {block_id(r)} received exception "
                        f"{r.choice(['java.io.IOException:', 'java.io.InterruptedIOException', 'java.io.EOFException'])}"),
    ]


def hdfs_header(rng: random.Random, clock: Clock, event_id: str) -> str:
    component = {
        "E1": "dfs.DataNode$PacketResponder",
        "E6": "dfs.DataNode$PacketResponder",
        "E2": "dfs.FSNamesystem",
        "E11": "dfs.FSNamesystem",
        "E12": "dfs.FSNamesystem",
        "E3": "dfs.DataNode$DataXceiver",
        "E4": "dfs.DataNode$DataXceiver",
        "E5": "dfs.DataNode$PacketResponder",
        "E8": "dfs.DataNode$DataXceiver",
        "E9": "dfs.DataNode$DataXceiver",
        "E15": "dfs.DataNode$DataXceiver",
        "E7": "dfs.DataBlockScanner",
        "E10": "dfs.FSDataset",
        "E13": "dfs.DataNode",
        "E14": "dfs.FSDataset",
    }[event_id]
    level = "WARN" if event_id in ("E9", "E14", "E15") else "INFO"
    h, m, s = Clock.hms(clock.tick(rng))
    return f"081109 {h:02d}{m:02d}{s:02d} {rng.randint(1, 999)} {level} {component}: "


# -------------------------------------------------------------- Apache ----

def apache_events() -> list[Event]:
    properties = ["/etc/httpd/conf/workers2.properties", "/etc/httpd/conf/workers.properties"]
    indexes = ["/var/www/html/", "/var/www/html/projects/", "/var/www/cgi-bin/", "/var/www/html/data/"]
    return [
        Event("E1", "jk2_init() Found child <*> in scoreboard slot <*>", 120,
              lambda r: f"jk2_init() Found child {r.randint(1000, 9999)} in scoreboard slot {r.randint(0, 12)}"),
        Event("E2", "workerEnv.init() ok <*>", 560,
              lambda r: f"workerEnv.init() ok {r.choice(properties)}"),
        Event("E3", "mod_jk child workerEnv in error state <*>", 560,
              lambda r: f"mod_jk child workerEnv in error state {r.choice([6, 6, 7, 8, 9])}"),
        Event("E4", "[client <*>] Directory index forbidden by rule: <*>", 500,
              lambda r: f"[client {ip(r)}] Directory index forbidden by rule: {r.choice(indexes)}"),
        Event("E5", "jk2_init() Can't find child <*> in scoreboard", 100,
              lambda r: f"jk2_init() Can't find child {r.randint(1000, 9999)} in scoreboard"),
        Event("E6", "mod_jk child init <*> <*>", 160,
              lambda r: f"mod_jk child init 1 {r.choice([-2, -2, 0, 2])}"),
    ]


def apache_header(rng: random.Random, clock: Clock, event_id: str) -> str:
    seconds = clock.tick(rng)
    day = 9 + (seconds // 86400)
    weekday = DAYS[(3 + seconds // 86400) % 7]
    h, m, s = Clock.hms(seconds)
    level = "error" if event_id in ("E3", "E4", "E5") else "notice"
    return f"[{weekday} Jun {day:02d} {h:02d}:{m:02d}:{s:02d} 2005] [{level}] "


# ----------------------------------------------------------- Zookeeper ----

def zookeeper_events() -> list[Event]:
    snapdir = "/var/lib/zookeeper/version-2"
    # negotiated timeout is a client config constant in practice; keeping it
    # fixed reproduces the documented above-minimum-frequency failure mode
    # ("10000ms" classified static) without fragmenting the event
    return [
        Event("E1", "Received connection request <*>", 170,
              lambda r: f"Received connection request /{ip(r)}:{port(r)}"),
        Event("E2", "Accepted socket connection from <*>", 170,
              lambda r: f"Accepted socket connection from /{ip(r)}:{port(r)}"),
        Event("E3", "Closed socket connection for client <*> which had sessionid <*>", 170,
              lambda r: f"Closed socket connection for client /{ip(r)}:{port(r)} "
                        f"which had sessionid {session_id(r)}"),
        Event("E4", "Client attempting to establish new session at <*>", 150,
              lambda r: f"Client attempting to establish new session at /{ip(r)}:{port(r)}"),
        Event("E5", "Established session <*> with negotiated timeout <*> for client <*>", 150,
              lambda r: f"Established session {session_id(r)} with negotiated timeout "
                        f"10000 for client /{ip(r)}:{port(r)}"),
        Event("E6", "Expiring session <*>, timeout of <*>ms exceeded", 120,
              lambda r: f"Expiring session {session_id(r)}, timeout of 10000ms exceeded"),
        Event("E7", "Processed session termination for sessionid: <*>", 100,
              lambda r: f"Processed session termination for sessionid: {session_id(r)}"),
        Event("E8", "caught end of stream exception", 90,
              lambda r: "caught end of stream exception"),
        Event("E9", "Exception causing close of session <*> due to java.io.IOException: "
                    "ZooKeeperServer not running", 70,
              lambda r: f"Exception causing close of session {session_id(r)} due to "
                        f"java.io.IOException: ZooKeeperServer not running"),
        Event("E10", "Connection broken for id <*>, my id = <*>, error =", 60,
              lambda r: f"Connection broken for id {r.randint(1, 4) * 94489280512 + r.randint(1, 9999)}, "
                        f"my id = 3, error ="),
        Event("E11", "Interrupting SendWorker", 55,
              lambda r: "Interrupting SendWorker"),
        Event("E12", "Interrupted while waiting for message on queue", 55,
              lambda r: "Interrupted while waiting for message on queue"),
        Event("E13", "Send worker leaving thread", 50,
              lambda r: "Send worker leaving thread"),
        Event("E14", "Connection request from old client <*>; will be dropped if server is in r-o mode", 45,
              lambda r: f"Connection request from old client /{ip(r)}:{port(r)}; "
                        f"will be dropped if server is in r-o mode"),
        Event("E15", "Revalidating client: <*>", 40,
              lambda r: f"Revalidating client: {session_id(r)}"),
        Event("E16", "Snapshotting: <*> to <*>", 35,
              lambda r: f"Snapshotting: {session_id(r)} to {snapdir}/snapshot.{session_id(r)[2:]}"),
        Event("E17", "Reading snapshot <*>", 30,
              lambda r: f"Reading snapshot {snapdir}/snapshot.{session_id(r)[2:]}"),
        Event("E18", "Notification time out: <*>", 30,
              lambda r: f"Notification time out: {r.choice([400, 800, 1600, 3200, 6400, 12800])}"),
        Event("E19", "Deleting snapshot <*>", 20,
              lambda r: f"Deleting snapshot {snapdir}/snapshot.{session_id(r)[2:]}"),
        Event("E20", "shutdown of request processor complete", 30,
              lambda r: "shutdown of request processor complete"),
    ]


def zookeeper_header(rng: random.Random, clock: Clock, event_id: str) -> str:
    nodes = [
        "main:QuorumPeer@1136",
        "NIOServerCxn.Factory:0.0.0.0/0.0.0.0:2181:NIOServerCnxnFactory@197",
        "NIOServerCxn.Factory:0.0.0.0/0.0.0.0:2181:NIOServerCnxn@1001",
        "CommitProcessor:1:ZooKeeperServer@617",
        "SessionTracker:ZooKeeperServer@314",
        "QuorumPeer[myid=2]/0:0:0:0:0:0:0:0:2181:Follower@63",
        "WorkerReceiver[myid=3]:FastLeaderElection@542",
    ]
    level = "WARN" if event_id in ("E6", "E8", "E9", "E10", "E14") else "INFO"
    h, m, s = Clock.hms(clock.tick(rng))
    return f"2015-07-29 {h:02d}:{m:02d}:{s:02d},{rng.randint(0, 999):03d} - {level}  [{rng.choice(nodes)}] - "


# --------------------------------------------------------------- Spark ----

def spark_events() -> list[Event]:
    hosts = ["mesos-slave-01", "mesos-slave-05", "mesos-slave-07", "mesos-slave-11"]
    # task/stage/broadcast ids advance like a real job's would, so each value
    # stays at the group's minimum frequency and is wildcarded by the
    # frequency rule rather than leaking into the template
    counters = {"tid": 0, "task": 0, "rdd": 0, "bc": 0, "mem": 0}

    def bump(key, r, step=3):
        counters[key] += r.randint(1, step)
        return counters[key]

    def task(r):
        return f"{bump('task', r)}.0"

    def stage(r):
        return f"{bump('task', r)}.0"

    def kb(r):
        return f"{r.randint(10, 9999) / 10:.1f}"

    def free_mb(r):
        # free memory drains monotonically across the run, one reading per
        # line, so readings never repeat within a group
        return f"{(5111 - bump('mem', r, step=2)) / 10:.1f}"

    return [
        Event("E1", "Got assigned task <*>", 120,
              lambda r: f"Got assigned task {bump('tid', r)}"),
        Event("E2", "Running task <*> in stage <*> (TID <*>)", 120,
              lambda r: f"Running task {task(r)} in stage {stage(r)} (TID {bump('tid', r)})"),
        Event("E3", "Finished task <*> in stage <*> (TID <*>). <*> bytes result sent to driver", 120,
              lambda r: f"Finished task {task(r)} in stage {stage(r)} "
                        f"(TID {bump('tid', r)}). {r.randint(1000, 99999)} bytes result sent to driver"),
        Event("E4", "Starting task <*> in stage <*> (TID <*>, <*>, partition <*>, PROCESS_LOCAL, <*> bytes)", 120,
              lambda r: f"Starting task {task(r)} in stage {stage(r)} "
                        f"(TID {bump('tid', r)}, {ip(r)}, partition {r.randint(0, 1999)}, "
                        f"PROCESS_LOCAL, {r.randint(1000, 9999)} bytes)"),
        Event("E5", "Found block <*> locally", 110,
              lambda r: f"Found block rdd_{bump('rdd', r)}_{r.randint(0, 63)} locally"),
        Event("E6", "Started reading broadcast variable <*>", 110,
              lambda r: f"Started reading broadcast variable {bump('bc', r)}"),
        Event("E7", "Reading broadcast variable <*> took <*> ms", 110,
              lambda r: f"Reading broadcast variable {bump('bc', r)} took {r.randint(5, 400)} ms"),
        Event("E8", "Block <*> stored as values in memory (estimated size <*> KB, free <*> MB)", 90,
              lambda r: f"Block broadcast_{bump('bc', r)} stored as values in memory "
                        f"(estimated size {kb(r)} KB, free {free_mb(r)} MB)"),
        Event("E9", "Block <*> stored as bytes in memory (estimated size <*> KB, free <*> MB)", 90,
              lambda r: f"Block broadcast_{bump('bc', r)}_piece0 stored as bytes in memory "
                        f"(estimated size {kb(r)} KB, free {free_mb(r)} MB)"),
        Event("E10", "Removed <*> on <*> in memory (size: <*> KB, free: <*> MB)", 90,
              lambda r: f"Removed broadcast_{bump('bc', r)}_piece0 on {ip(r)}:{port(r)} in memory "
                        f"(size: {kb(r)} KB, free: {free_mb(r)} MB)"),
        Event("E11", "Registered signal handlers for [TERM, HUP, INT]", 60,
              lambda r: "Registered signal handlers for [TERM, HUP, INT]"),
        Event("E12", "MemoryStore started with capacity <*> MB", 40,
              lambda r: f"MemoryStore started with capacity {free_mb(r)} MB"),
        Event("E13", "Slf4jLogger started", 40,
              lambda r: "Slf4jLogger started"),
        Event("E14", "Successfully registered with driver", 40,
              lambda r: "Successfully registered with driver"),
        Event("E15", "Executor updated: <*> is now RUNNING", 60,
              lambda r: f"Executor updated: app-20170609200303-{r.randint(0, 40):04d}/{r.randint(0, 16)} "
                        f"is now RUNNING"),
        Event("E16", "Starting executor ID <*> on host <*>", 40,
              lambda r: f"Starting executor ID {r.randint(0, 16)} on host {r.choice(hosts)}"),
    ]


def spark_header(rng: random.Random, clock: Clock, event_id: str) -> str:
    components = {
        "E1": "executor.CoarseGrainedExecutorBackend",
        "E2": "executor.Executor",
        "E3": "executor.Executor",
        "E4": "scheduler.TaskSetManager",
        "E5": "storage.BlockManager",
        "E6": "broadcast.TorrentBroadcast",
        "E7": "broadcast.TorrentBroadcast",
        "E8": "storage.MemoryStore",
        "E9": "storage.MemoryStore",
        "E10": "storage.BlockManagerInfo",
        "E11": "util.SignalUtils",
        "E12": "storage.MemoryStore",
        "E13": "util.log",
        "E14": "executor.CoarseGrainedExecutorBackend",
        "E15": "client.StandaloneAppClient$ClientEndpoint",
        "E16": "executor.CoarseGrainedExecutorBackend",
    }
    h, m, s = Clock.hms(clock.tick(rng))
    return f"17/06/09 {h:02d}:{m:02d}:{s:02d} INFO {components[event_id]}: "


# ------------------------------------------------------------- driver ----

DATASETS = {
    "HDFS": (hdfs_events, hdfs_header, Clock(73000, 4), 20081109),
    "Apache": (apache_events, apache_header, Clock(21900, 90), 20050609),
    "Zookeeper": (zookeeper_events, zookeeper_header, Clock(63700, 3), 20150729),
    "Spark": (spark_events, spark_header, Clock(72600, 2), 20170609),
}


def generate(name: str, events_factory, header, clock: Clock, seed: int) -> None:
    rng = random.Random(seed)
    events = events_factory()
    chosen = rng.choices(events, weights=[e.weight for e in events], k=LINES_PER_DATASET)

    log_path = SAMPLES / f"{name}_2k.log"
    csv_path = SAMPLES / f"{name}_2k.log_structured.csv"
    with log_path.open("w", encoding="utf-8", newline="") as log_fh, \
            csv_path.open("w", encoding="utf-8", newline="") as csv_fh:
        writer = csv.writer(csv_fh, lineterminator="\n")
        writer.writerow(["LineId", "Content", "EventId", "EventTemplate"])
        for line_id, event in enumerate(chosen, start=1):
            content = event.make(rng)
            log_fh.write(header(rng, clock, event.event_id) + content + "\n")
            writer.writerow([line_id, content, event.event_id, event.template])
    print(f"{name}: {LINES_PER_DATASET} lines, {len(events)} events -> {log_path.name}, {csv_path.name}")


def main() -> None:
    SAMPLES.mkdir(parents=True, exist_ok=True)
    for name, (events_factory, header, clock, seed) in DATASETS.items():
        generate(name, events_factory, header, clock, seed)


if __name__ == "__main__":
    main()
