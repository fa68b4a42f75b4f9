"""
Emitter Interface Module.

Every module under ``src/emitters/<family>/<kind>.py`` is a plug-in looked up
by ``main`` under the name ``<family>.<kind>``. Besides an :class:`IEmitter`
subclass, the module exposes:

	help()             one-line description shown for an invalid -e value
	get_class()        the IEmitter subclass
	setup_args(parser) adds emitter-specific flags to the subcommand parser
	file_extention()   extension of the written file, without the dot
"""

from abc import ABC, abstractmethod
import argparse

from colorama import Fore, Style


class IEmitter(ABC):
	"""
	Interface for result emitters.

	An emitter is built once per output file and writes one result table.

	Args:
		args: Command line arguments namespace
		output_file: Path of the file to write
	"""

	def __init__(self, args: argparse.Namespace, output_file: str):
		self.args = args
		self.output_file = output_file
		self.reproducible = bool(getattr(args, "reproducible", False))

	def announce(self) -> None:
		print(f"💾 | {Fore.LIGHTCYAN_EX}{self.output_file}{Style.RESET_ALL}")

	@abstractmethod
	def create(self, table) -> None:
		"""
		Write a result table.

		Args:
			table: ResultTable to write
		"""
