#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Utility functions for UPB Lab.

This module provides helpers used throughout the application for console
output, config-file parsing and emitter discovery.
"""

from os import listdir
import os
import re
from typing import Any, Dict, List, Optional, Tuple

from colorama import Back, Fore, Style

from src.errors import InvalidConfig


NUMBER = r'[+-]?([0-9]+([.][0-9]*)?|[.][0-9]+)([eE][+-]?[0-9]+)?'


def eprint(content: Any, **kwargs) -> None:
    """
    Print error message with colored background.

    Args:
        content: Content to print as error
        **kwargs: Additional arguments passed to print function
    """
    print(Back.RED, content, Style.RESET_ALL, **kwargs)


def status(marker: str, label: str, value: Any = "", color: str = Fore.LIGHTCYAN_EX) -> None:
    """Print a ``marker label value`` status line."""
    print(f"{marker} {Fore.GREEN}{label}{color} {value}{Style.RESET_ALL}")


def filler(cur: str, max_len: int, fill: Optional[str] = " ") -> str:
    """
    Pad string to specified length with filler characters.

    Args:
        cur: Current string to pad
        max_len: Target length for the string
        fill: Character(s) to use for padding

    Returns:
        str: Padded string with specified length
    """
    if len(cur) >= max_len:
        return cur

    if fill is None or len(fill) == 0:
        fill = " "

    filler_length = max_len - len(cur)
    filler_string = (fill * filler_length)[:filler_length]

    return filler_string + cur


def format_number(value: float) -> str:
    """Decimal text with 12 significant digits."""
    return f"{value:.12g}"


def parse_list(text: str) -> List[str]:
    """
    Parse a comma separated list into lower-case, stripped items.

    Args:
        text: String such as "g2_numeric, g2_analytic"

    Returns:
        List[str]: Items in the given order, empty items dropped
    """
    if not text:
        return []

    return [item.strip().lower() for item in text.split(',') if item.strip()]


def parse_float(text: str, key: str = "value") -> float:
    text = text.strip()
    if not re.match(f'^{NUMBER}$', text):
        raise InvalidConfig(f"{key}: '{text}' is not a number")
    return float(text)


def parse_int(text: str, key: str = "value") -> int:
    text = text.strip()
    if not re.match(r'^[+-]?[0-9]+$', text):
        raise InvalidConfig(f"{key}: '{text}' is not an integer")
    return int(text)


def parse_bool(text: str, key: str = "value") -> bool:
    text = text.strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off"):
        return False
    raise InvalidConfig(f"{key}: '{text}' is not a boolean")


def parse_axis(text: str, key: str = "axis") -> Tuple[str, float, float, int]:
    """
    Parse a sweep axis of the form ``name,start,stop,count``.

    Examples:
        >>> parse_axis("delta,-3,3,301")
        ('delta', -3.0, 3.0, 301)
    """
    parts = [part.strip() for part in text.split(',')]
    if len(parts) != 4:
        raise InvalidConfig(f"{key}: expected 'name,start,stop,count', got '{text}'")

    return (
        parts[0].lower(),
        parse_float(parts[1], key),
        parse_float(parts[2], key),
        parse_int(parts[3], key),
    )


def parse_config_text(text: str, source: str = "<config>") -> Dict[str, str]:
    """
    Parse flat ``key = value`` text.

    Blank lines and everything after '#' are ignored; later keys override
    earlier ones.

    Raises:
        InvalidConfig: On a line that is not ``key = value``
    """
    entries = {}

    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue

        match = re.match(r'^([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*)$', line)
        if match is None:
            raise InvalidConfig(f"{source}:{number}: expected 'key = value', got '{raw.strip()}'")

        entries[match[1].lower()] = match[2].strip()

    return entries


def parse_config_file(path: str) -> Dict[str, str]:
    """Read and parse a config file (see :func:`parse_config_text`)."""
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return parse_config_text(f.read(), path)
    except OSError as e:
        raise InvalidConfig(f"cannot read config file {path}: {e}") from e


def get_all_process_types(path: str, prefix: str = "") -> List[str]:
    """
    Recursively discover all available emitter types in emitters directory.

    Args:
        path: Directory path to search for emitters
        prefix: Prefix for nested package names

    Returns:
        List[str]: Sorted list of discovered emitter type names (e.g. "csv.table")
    """
    processes = []

    for part in sorted(listdir(path)):
        if part[0] == "_":
            continue

        if os.path.isfile(os.path.join(path, part)):
            if part.split(".")[-1] == "py":
                processes.append(prefix+part.split(".")[0])
        elif os.path.isfile(os.path.join(path, part, "__init__.py")):
            processes += get_all_process_types(os.path.join(path, part), prefix+part+".")

    return processes
