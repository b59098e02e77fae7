from .energy import Derivatives, StepContext, ip_value, ip_value_and_derivatives, stencil_stream
from .newton import (PRECONDITIONERS, NewtonStats, Simulator, SolverError, advance_time_step,
                     make_preconditioner, newton_step)
from .pcg import PcgResult, pcg_solve
from .system import System, SystemState
