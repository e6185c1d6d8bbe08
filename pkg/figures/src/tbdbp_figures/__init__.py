from .plot import FigureSpec, MissingColumn, RangeMismatch, plot_gospa_vs_time, read_series

__version__ = "0.1.0"
