"""Static figure rendering for the emitter-array toolkit's output files.

Pure readers: these scripts consume the documented CSV/JSON formats written
by the ``craqed`` command line and produce no numerical results of their
own.  Rendering is non-interactive and works without a display server.
"""

from .errors import MissingInput
from .render import render_dynamics, render_phasemap, render_spectrum

__version__ = "0.1.0"

__all__ = [
    "MissingInput",
    "render_dynamics",
    "render_phasemap",
    "render_spectrum",
]
