"""
CSV Table Emitter Module.

This module writes a result table as comma separated values with the
metadata block as leading '#' comment lines, and reads such files back.
"""

import argparse
import csv
import io
import re
from typing import Dict

from colorama import Fore, Style
from src.emitters._IEmitter import IEmitter

from src.errors import OutputError, ShapeMismatch
from src.SweepRunner import ResultTable
from src.utils import format_number


def help() -> str:
	return "Writes the result table as CSV with a '#' metadata header."


def get_class() -> type:
	return CsvTableEmitter


def setup_args(parser: argparse.ArgumentParser) -> None:
	"""The CSV emitter takes no options; --reproducible is read from the common flags."""


def file_extention() -> str:
	return "csv"


def render_csv(table: ResultTable, reproducible: bool = False) -> str:
	"""
	Render a table to CSV text.

	Args:
		table: Result table
		reproducible: Drop the 'created' timestamp line

	Returns:
		str: Metadata comment lines, header row and one row per grid point
	"""
	buffer = io.StringIO()

	for key, value in table.metadata.items():
		if reproducible and key == "created":
			continue
		buffer.write(f"# {key}: {value}\n")
	buffer.write(f"# shape: {'x'.join(str(n) for n in table.shape)}\n")

	writer = csv.writer(buffer, lineterminator="\n")
	writer.writerow(table.columns)
	for row in table.rows:
		writer.writerow([format_number(value) for value in row])

	return buffer.getvalue()


def emit_csv(table: ResultTable, path: str, reproducible: bool = False) -> None:
	"""
	Write a table to ``path``.

	Raises:
		OutputError: If the file cannot be written
	"""
	try:
		with open(path, 'w', encoding='utf-8', newline='') as f:
			f.write(render_csv(table, reproducible))
	except OSError as e:
		raise OutputError(f"cannot write {path}: {e}") from e


def parse_csv(path: str) -> ResultTable:
	"""
	Read a file written by :func:`emit_csv`.

	Raises:
		OutputError: If the file cannot be read
		ShapeMismatch: If a data row does not match the header
	"""
	try:
		with open(path, 'r', encoding='utf-8') as f:
			lines = f.read().splitlines()
	except OSError as e:
		raise OutputError(f"cannot read {path}: {e}") from e

	metadata: Dict[str, str] = {}
	body = []
	for line in lines:
		match = re.match(r'^#\s*([^:]+):\s?(.*)$', line)
		if match:
			metadata[match[1].strip()] = match[2]
		elif line.strip():
			body.append(line)

	shape_text = metadata.pop("shape", "")
	shape = tuple(int(n) for n in shape_text.split('x') if n)

	reader = csv.reader(body)
	columns = next(reader, [])
	rows = []
	for row in reader:
		if len(row) != len(columns):
			raise ShapeMismatch(f"row of {len(row)} values under {len(columns)} columns in {path}")
		rows.append([float(value) for value in row])

	return ResultTable(columns=columns, rows=rows, metadata=metadata, shape=shape)


class CsvTableEmitter(IEmitter):
	"""
	Result table to CSV emitter.
	"""

	def create(self, table: ResultTable) -> None:
		"""
		Write ``table`` to the output file.

		Args:
			table: Result table
		"""
		self.announce()
		emit_csv(table, self.output_file, self.reproducible)
		print(f"{Fore.LIGHTBLUE_EX}✅ | rows | columns |{Style.RESET_ALL}")
		print(f"   | {Fore.GREEN}{len(table.rows): 4} | {len(table.columns): 7} |{Style.RESET_ALL}")
