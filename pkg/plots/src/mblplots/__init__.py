"""Figures of mean cumulative regret with standard-error bands, rendered from
the summary JSON written by the markovbandits experiment harness."""

from .render import PlotSpec, load_summary, render

__version__ = "0.1.0"

__all__ = ["PlotSpec", "load_summary", "render"]
