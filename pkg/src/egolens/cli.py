"""Command line entry point: load a dataset and serve it."""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from .adapters.dblp import parse_dblp
from .adapters.edgelist import load_edge_list
from .adapters.snapshot import load_snapshot, save_snapshot
from .config import load_config
from .server import make_server
from .service import GraphService


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="egolens",
        description="Serve browsable time-aware ego graphs over a dataset.",
    )
    parser.add_argument("--data", required=True, help="path to the dataset file")
    parser.add_argument(
        "--adapter",
        required=True,
        choices=("edgelist", "dblp", "snapshot"),
        help="how to read --data",
    )
    parser.add_argument("--config", required=True, help="graph configuration file")
    parser.add_argument(
        "--attrs", default=None, help="entity attribute file (edgelist adapter)"
    )
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument(
        "--port", type=int, default=8080,
        help="listen port; the EGOLENS_PORT environment variable overrides it",
    )
    parser.add_argument("--cache-size", type=int, default=256)
    parser.add_argument(
        "--ui-dir", default=None, help="directory with the built web UI"
    )
    parser.add_argument(
        "--save-snapshot", default=None,
        help="write the loaded dataset to this snapshot file before serving",
    )
    return parser


def load_dataset(args: argparse.Namespace):
    config = load_config(Path(args.config))
    if args.adapter == "edgelist":
        attrs = None
        if args.attrs:
            attrs = open(args.attrs, encoding="utf-8").read()
        with open(args.data, encoding="utf-8") as handle:
            dataset = load_edge_list(handle, config.period_length, attributes=attrs)
    elif args.adapter == "dblp":
        with open(args.data, encoding="utf-8") as handle:
            dataset = parse_dblp(handle)
    else:
        dataset = load_snapshot(args.data)
    return dataset, config


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    args = build_parser().parse_args(argv)
    dataset, config = load_dataset(args)
    if args.save_snapshot:
        save_snapshot(dataset, args.save_snapshot)
        logging.info("snapshot written to %s", args.save_snapshot)

    port = args.port
    env_port = os.environ.get("EGOLENS_PORT")
    if env_port:
        try:
            port = int(env_port)
        except ValueError:
            print(f"EGOLENS_PORT must be an integer, got {env_port!r}", file=sys.stderr)
            return 2

    service = GraphService(dataset, config, cache_size=args.cache_size)
    server = make_server(service, host=args.host, port=port, ui_dir=args.ui_dir)
    frame = dataset.time_frame()
    logging.info(
        "serving on http://%s:%d (%d periods from %d)",
        args.host, server.server_address[1], frame.period_count, frame.origin,
    )
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
