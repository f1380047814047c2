from . import window_law
