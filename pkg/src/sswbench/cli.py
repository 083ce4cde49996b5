"""Command-line entry point.

Exit codes: 0 success, 1 invalid input, 2 I/O failure, 3 internal error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .encoding import encode, extract
from .files import ConfigError, load_reading, load_scenario
from .observation import ValidationError
from .payload import EncodeOptions, EncodingId, ExtractionError
from .report import emit_csv, emit_plotdata, format_summary, sweep
from .triples import ProjectionError, UnresolvedPrefixError, equivalent, to_ntriples
from .xmltree import XmlSyntaxError

EXIT_OK, EXIT_INVALID, EXIT_IO, EXIT_INTERNAL = 0, 1, 2, 3


def _on_off(text: str) -> bool:
    if text not in ("on", "off"):
        raise argparse.ArgumentTypeError("expected 'on' or 'off'")
    return text == "on"


def _read_bytes(path: str) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


def cmd_encode(args) -> int:
    reading = load_reading(args.reading)
    payload = encode(reading, args.encoding, EncodeOptions(include_timestamp=args.include_timestamp))
    Path(args.out).write_bytes(payload.bytes)
    print(payload.size_bytes)
    return EXIT_OK


def cmd_extract(args) -> int:
    _, triples = extract(_read_bytes(args.xml))
    sys.stdout.write(to_ntriples(triples))
    return EXIT_OK


def cmd_compare(args) -> int:
    reading = load_reading(args.reading)
    options = EncodeOptions(include_timestamp=args.include_timestamp)
    ssw = encode(reading, EncodingId.SSW, options)
    es3n = encode(reading, EncodingId.ES3N, options)
    same = equivalent(extract(ssw)[1], extract(es3n)[1])
    print(f"SSW  {ssw.size_bytes} bytes")
    print(f"ES3N {es3n.size_bytes} bytes")
    print(f"ratio ES3N/SSW {es3n.size_bytes / ssw.size_bytes:.4f}")
    print("EQUIVALENT" if same else "DIFFERENT")
    return EXIT_OK


def cmd_sweep(args) -> int:
    config = load_scenario(args.config)
    if args.seed is not None:
        config = replace(config, seeds=(args.seed,))
    if args.include_timestamp is not None:
        sim = replace(config.sim, options=replace(config.sim.options, include_timestamp=args.include_timestamp))
        config = replace(config, sim=sim)
    result = sweep(config.n_list, config.encodings, config.seeds, config.sim)
    if not result.rows:
        print(format_summary(result), file=sys.stderr)
        return EXIT_INVALID
    out_dir = Path(args.out) if args.out else Path(".")
    csv_path, dat_path = out_dir / config.csv_path, out_dir / config.plotdata_path
    for path, text in ((csv_path, emit_csv(result)), (dat_path, emit_plotdata(result))):
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    print(format_summary(result))
    print(f"wrote {csv_path} and {dat_path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sswbench", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="encode a reading file as SSW or ES3N XML")
    p.add_argument("reading")
    p.add_argument("--encoding", choices=[e.value for e in EncodingId], required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--include-timestamp", type=_on_off, default=False, metavar="{on|off}")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("extract", help="print the triples of an SSW or ES3N document as N-Triples")
    p.add_argument("xml")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("compare", help="sizes of both encodings of a reading and whether they agree")
    p.add_argument("reading")
    p.add_argument("--include-timestamp", type=_on_off, default=False, metavar="{on|off}")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("sweep", help="run a network-size sweep and write CSV + plot data")
    p.add_argument("--config", required=True)
    p.add_argument("--seed", type=int, help="run this single seed instead of the configured list")
    p.add_argument("--out", help="directory for relative output paths (default: current directory)")
    p.add_argument("--include-timestamp", type=_on_off, default=None, metavar="{on|off}")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: no such file: {exc.filename}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ConfigError as exc:
        for problem in exc.problems:
            print(f"error: {problem}", file=sys.stderr)
        return EXIT_INVALID
    except (ValidationError, XmlSyntaxError, ExtractionError, ProjectionError, UnresolvedPrefixError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
