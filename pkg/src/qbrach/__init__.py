"""Time-optimal quantum control toolkit.

Submodules:
    matcore  -- validated dense Hermitian matrix primitives
    brach    -- quantum brachistochrone integrator
    catalog  -- closed-form scenario catalog and validators
    gates    -- unitary gate and group-identity checks
    special  -- polynomial / special-function verification
    report   -- verification sweeps and report envelopes
    cli      -- command-line front end
"""

__version__ = "0.1.0"

from .matcore import ValidationError  # noqa: F401
