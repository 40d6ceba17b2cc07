"""Strict reading of small headed CSV tables as string cells."""

import re
from pathlib import Path
from typing import Callable, TextIO

import pandas as pd

from blinklab.errors import BlinklabError

_LINE = re.compile(r"line (\d+)")


def read_table(
    source: Path | str | TextIO, error: Callable[[str], BlinklabError]
) -> pd.DataFrame:
    """
    Read a CSV whose first line is the header into a frame of stripped string cells.

    Every row must have exactly as many fields as the header. Data rows are
    numbered from 1 in diagnostics.

    Raises:
        pd.errors.EmptyDataError: The input has no header line
        BlinklabError: Built by `error` for a row with too many or too few fields
    """
    try:
        raw = pd.read_csv(
            source, header=None, dtype=str, keep_default_na=False, skipinitialspace=True
        )
    except pd.errors.ParserError as e:
        match = _LINE.search(str(e))
        where = f" at row {int(match.group(1)) - 1}" if match else ""
        raise error(f"Malformed CSV{where}: {e}") from None

    header = [str(c).strip() for c in raw.iloc[0]]
    data = raw.iloc[1:].reset_index(drop=True)
    short = data.isna().any(axis=1)
    if short.any():
        row = int(short.to_numpy().argmax()) + 1
        fields = int(data.iloc[row - 1].notna().sum())
        raise error(f"Malformed CSV: row {row} has {fields} field(s), header has {len(header)}")

    data.columns = header
    return data.map(str.strip)
