# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.


# Convenient access to the version number
from ._version import __version__

# Direct access to the scalar fields and the Kummer tower
from .fields import QQ_FIELD, QQ_OMEGA, fp_with_omega
from .tower import Tower

# Direct access to the cubic surface tools
from .surface import DiagonalCubic, fibration_surface, lines27, rationality_test
from .segre import unirational_map

# Direct access to the checks and their reports
from .chain import verify_chain
from .geiser import verify_geiser
from .report import RunConfig, VerificationReport, emit_report
