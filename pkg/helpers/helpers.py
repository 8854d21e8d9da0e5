# -------------------------------------------------
# Contains helper functions to keep code_runner file clean:
# configuration loading, timers, CodeFile save/load and validators.
# -------------------------------------------------

import json
import logging
import sys
import time
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, NamedTuple, Optional

from helpers.errors import CodeFileParseError, DimensionMismatchError, InvalidConstructionError
from search.augment import SearchConfig
from space.subspace import Subspace, canonicalize, meet_dim
from space.subspace_code import CodeParams, SubspaceCode

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

HEADER_MAGIC = "SUBSPACE-CODE"
HEADER_KEYS = ("q", "v", "k", "d", "M", "tag")

_timer_start = None  # need a global counter to keep track


@dataclass(frozen=True)
class RunConfig:
    """Merged run settings: built-in defaults < config file < command-line flags."""
    seed: int = 1
    restarts: int = 1_000_000
    time_budget: Optional[float] = None
    format: str = "text"
    strategy: str = "greedy-randomized"
    resample_choice: bool = True
    coset_edge_model: str = "planes"
    target_size: Optional[int] = 329
    output_dir: str = "codes"
    progress: bool = False

    def merged(self, overrides: Dict[str, Any]) -> "RunConfig":
        """
        @param overrides: Values to apply; keys must be RunConfig fields, None values are skipped.
        @returns A new RunConfig.
        """
        known = {f.name for f in fields(self)}
        unknown = sorted(set(overrides) - known)
        if unknown:
            raise InvalidConstructionError(f"unknown configuration keys: {', '.join(unknown)}")
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def searchConfig(self) -> SearchConfig:
        return SearchConfig(seed=self.seed, restarts=self.restarts, time_budget=self.time_budget,
                            strategy=self.strategy, resample_choice=self.resample_choice,
                            target_size=self.target_size, progress=self.progress)


def load_config(config_path: str) -> dict:
    """
    Loads the configuration file from JSON.

    @param config_path: Path to the config file.
    @returns Parsed config dictionary.
    """
    try:
        with open(config_path, 'r') as f:
            config = json.load(f)
    except (OSError, ValueError) as e:
        print(f"Error loading config: {e}", file=sys.stderr)
        sys.exit(EXIT_USAGE)
    if not isinstance(config, dict):
        print(f"Error loading config: {config_path} does not hold a JSON object", file=sys.stderr)
        sys.exit(EXIT_USAGE)
    return config


def build_run_config(file_config: Optional[dict], flags: Dict[str, Any]) -> RunConfig:
    """Applies the config file and then the flags over the built-in defaults."""
    config = RunConfig()
    if file_config:
        config = config.merged(file_config)
    return config.merged(flags)


def start_timer():
    """Starts a timer for measuring elapsed time."""
    global _timer_start
    _timer_start = time.perf_counter()


def stop_timer(label="Elapsed") -> Optional[float]:
    """Stops the timer, logs the elapsed time with a label and returns it in seconds."""
    global _timer_start
    if _timer_start is None:
        logger.warning("%s: timer was not started", label)
        return None
    elapsed = time.perf_counter() - _timer_start
    logger.info("%s: %.4f seconds", label, elapsed)
    _timer_start = None
    return elapsed


class CodeFile(NamedTuple):
    code: SubspaceCode
    claimed_size: int


def code_to_text(code: SubspaceCode) -> str:
    """
    Serializes a code.

    Format:
    SUBSPACE-CODE q=<q> v=<v> k=<k> d=<d> M=<M> tag=<provenance>
    <k rows of v characters over {0,1}>
    <blank line>
    ...

    @param code: The code; its provenance must not contain whitespace.
    """
    p = code.params
    tag = code.provenance or "untagged"
    if any(ch.isspace() for ch in tag):
        raise InvalidConstructionError(f"provenance tag '{tag}' contains whitespace")
    lines = [f"{HEADER_MAGIC} q={p.q} v={p.v} k={p.k} d={p.d} M={code.size} tag={tag}"]
    for w in code.words:
        lines.extend(w.toStrings())
        lines.append("")
    return "\n".join(lines[:-1] if code.words else lines) + "\n"


def _parse_header(line: str) -> Dict[str, str]:
    parts = line.split()
    if not parts or parts[0] != HEADER_MAGIC:
        raise CodeFileParseError(f"expected header starting with {HEADER_MAGIC}", 1)
    values = {}
    for token in parts[1:]:
        key, sep, value = token.partition("=")
        if not sep or key not in HEADER_KEYS or key in values:
            raise CodeFileParseError(f"bad header field '{token}'", 1)
        values[key] = value
    missing = [k for k in HEADER_KEYS if k not in values]
    if missing:
        raise CodeFileParseError(f"header lacks {', '.join(missing)}", 1)
    return values


def parse_code_text(text: str) -> CodeFile:
    """
    Parses a CodeFile. Rows must already be in canonical reduced echelon form.

    @returns CodeFile(code, claimed_size); the claimed M is checked by the verifier.
    @raises CodeFileParseError with the offending line number.
    """
    lines = text.splitlines()
    if not lines:
        raise CodeFileParseError("empty file", 1)
    header = _parse_header(lines[0])
    try:
        q, v, k, d, M = (int(header[key]) for key in ("q", "v", "k", "d", "M"))
        params = CodeParams(v, k, d, q)
    except (ValueError, InvalidConstructionError) as e:
        raise CodeFileParseError(f"bad header: {e}", 1) from e

    blocks = []
    current, start = [], 0
    for line_no, raw in enumerate(lines[1:], start=2):
        row = raw.strip()
        if not row:
            if current:
                blocks.append((start, current))
                current = []
            continue
        if len(row) != v or set(row) - {"0", "1"}:
            raise CodeFileParseError(f"expected {v} characters over 0/1, got '{row}'", line_no)
        if not current:
            start = line_no
        current.append(row)
    if current:
        blocks.append((start, current))

    words = []
    for start, rows in blocks:
        if len(rows) != k:
            raise CodeFileParseError(f"block has {len(rows)} rows, expected {k}", start)
        try:
            U = canonicalize(rows, v)
        except DimensionMismatchError as e:
            raise CodeFileParseError(str(e), start) from e
        if U.toStrings() != rows:
            raise CodeFileParseError("rows are not in canonical reduced echelon form", start)
        words.append(U)
    try:
        code = SubspaceCode(params, tuple(words), header["tag"])
    except InvalidConstructionError as e:
        raise CodeFileParseError(str(e)) from e
    return CodeFile(code, M)


def save_code_to_txt(code: SubspaceCode, filename: str):
    """
    Saves the code to a text file in the CodeFile format.

    @param code: The (already verified) code.
    @param filename: Path to the output .txt file
    """
    with open(filename, 'w', newline="\n") as f:
        f.write(code_to_text(code))
    logger.info("code saved to %s", filename)


def load_code_from_txt(filename: str) -> CodeFile:
    """
    Loads a code from a CodeFile.

    @param filename: Path to the .txt file
    @returns CodeFile(code, claimed_size)
    """
    with open(filename, 'r') as f:
        text = f.read()
    loaded = parse_code_text(text)
    logger.info("code loaded from %s: %d words", filename, loaded.code.size)
    return loaded


def validate_claimed_size(loaded: CodeFile) -> bool:
    """
    Validates that the header's M matches the number of codeword blocks.

    @return: True if they agree; False otherwise.
    """
    if loaded.claimed_size != loaded.code.size:
        logger.warning("size error: header claims M=%d, file holds %d codewords",
                       loaded.claimed_size, loaded.code.size)
        return False
    return True


def validate_meets(code: SubspaceCode, S: Subspace, max_meet: int) -> bool:
    """
    Validates that every codeword meets S in dimension at most max_meet.

    @return: True if all codewords do; False otherwise.
    """
    try:
        for i, U in enumerate(code.words):
            if meet_dim(U, S) > max_meet:
                logger.warning("meet error: codeword %d meets S in dimension %d > %d",
                               i, meet_dim(U, S), max_meet)
                return False
        return True
    except DimensionMismatchError as e:
        logger.warning("meet validation skipped: %s", e)
        return True
