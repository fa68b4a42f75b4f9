"""
SVG rendering shared by the line and heatmap emitters.

Figures are drawn with matplotlib straight onto a Figure object (no pyplot
state) and saved as standalone SVG. Values whose column name starts with
``log10_`` are drawn on the log10 scale used by the figure panels.
"""

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from src.errors import OutputError, ShapeMismatch
from src.SweepRunner import ResultTable

matplotlib.rcParams["svg.hashsalt"] = "upb-lab"

LABELS = {
	"delta_over_kappa": r"$\Delta/\kappa$",
	"phi_over_pi": r"$\phi/\pi$",
	"chi_over_kappa": r"$\chi/\kappa$",
	"lambda_over_kappa": r"$\Lambda/\kappa$",
	"omega_over_kappa": r"$\Omega/\kappa$",
	"gamma_over_kappa": r"$\gamma/\kappa$",
	"kappa_tau": r"$\kappa\tau$",
	"log10_g2_numeric": r"$\log_{10} g^{(2)}(0)$ numerical",
	"log10_g2_analytic": r"$\log_{10} g^{(2)}(0)$ analytical",
	"g2_tau": r"$g^{(2)}(\tau)$",
}


def value_columns(table: ResultTable) -> list:
	"""Columns to draw: the log10 ones if present, otherwise all quantity columns."""
	quantities = [c for c in table.columns[len(table.shape):] if c != "error_code"]
	logs = [c for c in quantities if c.startswith("log10_")]
	return logs or quantities


def _clean(table: ResultTable) -> np.ndarray:
	if "error_code" not in table.columns:
		return np.ones(len(table.rows), dtype=bool)
	return table.column("error_code") == 0


def _save(fig: Figure, path: str) -> None:
	try:
		fig.savefig(path, format="svg", metadata={"Date": None})
	except OSError as e:
		raise OutputError(f"cannot write {path}: {e}") from e


def draw_line(table: ResultTable, path: str) -> None:
	if len(table.shape) != 1:
		raise ShapeMismatch(f"line plot needs a 1-D table, got shape {table.shape}")

	axis = table.columns[0]
	clean = _clean(table)
	x = table.column(axis)[clean]

	fig = Figure(figsize=(6.0, 4.0))
	ax = fig.add_subplot()
	for name in value_columns(table):
		ax.plot(x, table.column(name)[clean], label=LABELS.get(name, name))

	ax.set_xlabel(LABELS.get(axis, axis))
	ax.grid(True, alpha=0.3)
	ax.legend(loc="best", fontsize="small")
	if "preset" in table.metadata:
		ax.set_title(table.metadata["preset"])
	fig.tight_layout()
	_save(fig, path)


def draw_heatmap(table: ResultTable, path: str) -> None:
	if len(table.shape) != 2:
		raise ShapeMismatch(f"heatmap needs a 2-D table, got shape {table.shape}")

	columns = value_columns(table)
	if not columns:
		raise ShapeMismatch("heatmap needs at least one quantity column")

	rows, cols = table.shape
	x = table.column(table.columns[0]).reshape(rows, cols)[:, 0]
	y = table.column(table.columns[1]).reshape(rows, cols)[0, :]
	z = np.where(_clean(table), table.column(columns[0]), np.nan).reshape(rows, cols)

	fig = Figure(figsize=(6.0, 4.5))
	ax = fig.add_subplot()
	mesh = ax.pcolormesh(x, y, z.T, shading="nearest", cmap="viridis")
	fig.colorbar(mesh, ax=ax, label=LABELS.get(columns[0], columns[0]))

	ax.set_xlabel(LABELS.get(table.columns[0], table.columns[0]))
	ax.set_ylabel(LABELS.get(table.columns[1], table.columns[1]))
	if "preset" in table.metadata:
		ax.set_title(table.metadata["preset"])
	fig.tight_layout()
	_save(fig, path)


def emit_svg(table: ResultTable, path: str, kind: str = "line") -> None:
	"""
	Render a table as a standalone SVG file.

	Args:
		table: 1-D table for ``line``, 2-D table for ``heatmap``
		path: Output path
		kind: "line" or "heatmap"

	Raises:
		ShapeMismatch: If the table shape does not fit the kind
		OutputError: If the file cannot be written
	"""
	if kind == "line":
		draw_line(table, path)
	elif kind == "heatmap":
		draw_heatmap(table, path)
	else:
		raise ShapeMismatch(f"unknown plot kind '{kind}'")
