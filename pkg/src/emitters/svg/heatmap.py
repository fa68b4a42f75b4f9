"""
SVG Heatmap Emitter Module.

This module renders a result table to a static SVG heatmap plot.
"""

import argparse

from src.emitters._IEmitter import IEmitter

from src.emitters.svg import emit_svg
from src.SweepRunner import ResultTable


def help() -> str:
	return "Draws a 2-D result table as a log10 colour map in an SVG file."


def get_class() -> type:
	return SvgHeatmapEmitter


def setup_args(parser: argparse.ArgumentParser) -> None:
	"""The SVG emitters take no options."""


def file_extention() -> str:
	return "svg"


class SvgHeatmapEmitter(IEmitter):
	"""
	Result table to SVG heatmap emitter.
	"""

	def create(self, table: ResultTable) -> None:
		"""
		Render ``table`` to the output file.

		Args:
			table: Result table
		"""
		self.announce()
		emit_svg(table, self.output_file, "heatmap")
